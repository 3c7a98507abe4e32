// Command-line front end: verify instances, dump structures, list the
// catalog. Exit codes: 0 all checks pass, 1 at least one check fails,
// 2 bad input or construction error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include <qhg/json_io.hpp>

using namespace qhg;

namespace {

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return json::parse(in);
}

void write_output(const json& j, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << j.dump(2) << "\n";
}

const char* status_tag(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "[PASS]";
        case CheckStatus::Fail: return "[FAIL]";
        case CheckStatus::Skipped: return "[SKIP]";
        case CheckStatus::Finding: return "[NOTE]";
    }
    return "[????]";
}

void print_record(const std::string& target, const CheckRecord& r) {
    std::cout << status_tag(r.status) << " " << target << "/" << r.id;
    if (!r.detail.empty()) std::cout << " — " << r.detail;
    std::cout << "\n";
    if (r.status == CheckStatus::Fail && !r.witness.empty()) {
        if (!r.witness.description.empty())
            std::cout << "       witness: " << r.witness.description << "\n";
        for (const auto& [k, v] : r.witness.fields)
            std::cout << "       " << k << " = " << v << "\n";
    }
}

int print_report(const VerificationReport& rep, bool quiet) {
    if (!quiet)
        for (const auto& [target, rec] : rep.records) print_record(target, rec);
    std::cout << rep.instance << ": " << rep.records.size() << " checks, "
              << rep.count(CheckStatus::Pass) << " passed, " << rep.count(CheckStatus::Fail)
              << " failed, " << rep.count(CheckStatus::Skipped) << " skipped, "
              << rep.count(CheckStatus::Finding) << " findings\n";
    return rep.ok() ? 0 : 1;
}

struct ModelArgs {
    std::string group;
    std::string subgroup = "trivial";
    std::string weight = "1";
    std::string model = "function";

    GroupPtr g() const { return catalog(group).group; }
    std::vector<int> K() const {
        const CatalogEntry e = catalog(group);
        const auto it = e.subgroups.find(subgroup);
        if (it == e.subgroups.end())
            throw std::invalid_argument("unknown subgroup name: " + subgroup);
        return it->second;
    }
    HopfStarAlgebra algebra() const {
        const Rational w = parse_rat(weight);
        if (sgn(w) <= 0) throw std::invalid_argument("weight must be positive");
        if (model == "function") return build_function_algebra(g(), w);
        if (model == "group") return build_group_algebra(g(), w);
        throw std::invalid_argument("model must be function or group");
    }
    Vec projection() const {
        return model == "function" ? subset_indicator(g()->order, K())
                                   : uniform_average(g()->order, K());
    }
};

void add_model_options(CLI::App* cmd, ModelArgs& m, bool with_model = true) {
    cmd->add_option("--group", m.group, "catalog group name")->required();
    cmd->add_option("--subgroup", m.subgroup, "catalog subgroup name");
    cmd->add_option("--weight", m.weight, "positive rational weight of the integral");
    if (with_model)
        cmd->add_option("--model", m.model, "function (pointwise) or group (convolution)");
}

int run_verify_algebra(const std::string& path, bool quiet) {
    const HopfStarAlgebra A = algebra_from_json(read_json_file(path));
    VerificationReport rep;
    rep.instance = A.name;
    for (auto& r : verify_axioms(A)) rep.add("algebra", std::move(r));
    const ModularData md = compute_modular_data(A);
    for (auto& r : verify_modular(A, md)) rep.add("algebra", std::move(r));
    const Duality D = dualize(A);
    for (auto& r : verify_duality(A, D, md)) rep.add("algebra", std::move(r));
    rep.add("algebra", check_bidual(A));
    rep.canonicalize();
    return print_report(rep, quiet);
}

int run_catalog(const std::string& name) {
    if (name.empty()) {
        std::cout << "catalog groups:\n";
        for (const auto& n : catalog_names()) std::cout << "  " << n << "\n";
        return 0;
    }
    const CatalogEntry e = catalog(name);
    std::cout << name << ": order " << e.group->order << "\n";
    for (const auto& [sname, elems] : e.subgroups) {
        const Subgroup sub = make_subgroup(e.group, elems);
        std::cout << "  " << sname << ": order " << elems.size()
                  << (is_normal(*e.group, sub) ? " (normal)" : "") << " {";
        for (size_t i = 0; i < elems.size(); ++i)
            std::cout << (i ? "," : "") << elems[static_cast<size_t>(i)];
        std::cout << "}\n";
    }
    return 0;
}

int run_chain(const ModelArgs& m, bool quiet) {
    InstanceSpec spec;
    spec.name = m.group + "/" + m.subgroup;
    spec.group = m.g();
    spec.subgroup = m.K();
    spec.weight = parse_rat(m.weight);
    spec.with_duals = false;
    VerificationReport full = run_suite(spec, {});
    VerificationReport rep;
    rep.instance = spec.name;
    for (auto& [target, rec] : full.records)
        if (target.rfind("chain_", 0) == 0) rep.add(target, std::move(rec));
    return print_report(rep, quiet);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of quantum hypergroup constructions on finite instances"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand(
        "verify", "run every check family on an instance spec, or axioms on an algebra dump");
    std::string spec_path, algebra_path, json_out;
    int jobs = 1;
    bool quiet = false;
    verify->add_option("spec", spec_path, "instance spec (JSON file)");
    verify->add_option("--algebra", algebra_path, "verify a dumped algebra instead of a spec");
    verify->add_option("--json", json_out, "write the full report as JSON to this path");
    verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 64));
    verify->add_flag("--quiet", quiet, "print only the summary line");

    // dump
    auto* dump = app.add_subcommand("dump", "dump a model algebra (or its dual) as JSON");
    ModelArgs dump_args;
    bool dump_dual = false;
    std::string dump_out;
    add_model_options(dump, dump_args);
    dump->add_flag("--dual", dump_dual, "dump the dual algebra");
    dump->add_option("-o,--output", dump_out, "output path (default stdout)");

    // hecke
    auto* hecke = app.add_subcommand("hecke", "dump the double-coset classes and their averages");
    ModelArgs hecke_args;
    std::string hecke_out;
    add_model_options(hecke, hecke_args, false);
    hecke->add_option("-o,--output", hecke_out, "output path (default stdout)");

    // compact
    auto* compact = app.add_subcommand("compact", "dump the corner algebra of the projection");
    ModelArgs compact_args;
    std::string compact_out;
    add_model_options(compact, compact_args);
    compact->add_option("-o,--output", compact_out, "output path (default stdout)");

    // discrete
    auto* discrete = app.add_subcommand(
        "discrete", "dump the discrete part: expectations, C1, averaged coproduct");
    ModelArgs discrete_args;
    std::string discrete_out;
    add_model_options(discrete, discrete_args);
    discrete->add_option("-o,--output", discrete_out, "output path (default stdout)");

    // catalog
    auto* cat = app.add_subcommand("catalog", "list catalog groups, or one group's subgroups");
    std::string cat_name;
    cat->add_option("name", cat_name, "catalog group name");

    // chain
    auto* chain = app.add_subcommand("chain", "run the nested-projection chain checks");
    ModelArgs chain_args;
    bool chain_quiet = false;
    add_model_options(chain, chain_args, false);
    chain->add_flag("--quiet", chain_quiet, "print only the summary line");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            if (!algebra_path.empty()) return run_verify_algebra(algebra_path, quiet);
            if (spec_path.empty()) {
                std::cerr << "verify: need a spec file or --algebra\n";
                return 2;
            }
            const InstanceSpec spec = instance_spec_from_json(read_json_file(spec_path));
            SuiteOptions opt;
            opt.jobs = jobs;
            const VerificationReport rep = run_suite(spec, opt);
            if (!json_out.empty()) write_output(report_json(rep), json_out);
            return print_report(rep, quiet);
        }
        if (dump->parsed()) {
            HopfStarAlgebra A = dump_args.algebra();
            if (dump_dual) A = dualize(A).dual;
            write_output(algebra_json(A), dump_out);
            return 0;
        }
        if (hecke->parsed()) {
            write_output(hecke_json(hecke_args.g(), hecke_args.K()), hecke_out);
            return 0;
        }
        if (compact->parsed()) {
            const HopfStarAlgebra A = compact_args.algebra();
            write_output(compact_json(A, build_compact(A, compact_args.projection())),
                         compact_out);
            return 0;
        }
        if (discrete->parsed()) {
            const HopfStarAlgebra A = discrete_args.algebra();
            write_output(discrete_json(A, build_discrete(A, discrete_args.projection())),
                         discrete_out);
            return 0;
        }
        if (cat->parsed()) return run_catalog(cat_name);
        if (chain->parsed()) return run_chain(chain_args, chain_quiet);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
