// Batch front end: load documents, run one operation, emit a JSON report and
// a human summary.  Summaries go to stderr, reports to --out (default
// stdout), so reports stay machine-readable.  Exit codes: 0 success, 1 input
// or validation failure, 2 internal invariant failure.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "strata/corpus.hpp"
#include "strata/io.hpp"

using namespace strata;

namespace {

struct Document {
    enum class Kind { poset, complex, strat, sheaf, decomposition } kind;
    Poset poset;
    SimplicialComplex complex;
    StratifiedComplex strat;
    Sheaf sheaf;
    json raw;
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError("parse error in " + path + ": " + e.what());
    }
}

Document load(const std::string& ref) {
    Document doc;
    if (ref.rfind("corpus:", 0) == 0) {
        std::string name = ref.substr(7);
        auto complexes = corpus::complex_names();
        auto strats = corpus::stratified_names();
        auto sheaves = corpus::sheaf_names();
        if (std::find(strats.begin(), strats.end(), name) != strats.end()) {
            doc.kind = Document::Kind::strat;
            doc.strat = corpus::stratified(name);
            doc.complex = doc.strat.complex;
            return doc;
        }
        if (std::find(complexes.begin(), complexes.end(), name) != complexes.end()) {
            doc.kind = Document::Kind::complex;
            doc.complex = corpus::complex(name);
            return doc;
        }
        if (std::find(sheaves.begin(), sheaves.end(), name) != sheaves.end()) {
            doc.kind = Document::Kind::sheaf;
            auto ns = corpus::sheaf(name);
            doc.sheaf = ns.sheaf;
            doc.strat = ns.base;
            doc.complex = ns.base.complex;
            return doc;
        }
        throw ValidationError("unknown corpus entry: " + name);
    }
    json j = read_json_file(ref);
    doc.raw = j;
    if (j.contains("base") && j.contains("dims")) {
        doc.kind = Document::Kind::sheaf;
        doc.sheaf = sheaf_from_json(j, &doc.strat);
        doc.complex = doc.strat.complex;
    } else if (j.contains("unzip") && j.contains("link")) {
        doc.kind = Document::Kind::decomposition;
    } else if (j.contains("complex") && j.contains("poset")) {
        doc.kind = Document::Kind::strat;
        doc.strat = strat_from_json(j);
        doc.complex = doc.strat.complex;
    } else if (j.contains("vertices")) {
        doc.kind = Document::Kind::complex;
        doc.complex = complex_from_json(j);
    } else if (j.contains("elements")) {
        doc.kind = Document::Kind::poset;
        doc.poset = poset_from_json(j);
    } else {
        throw ValidationError("unrecognized document shape in " + ref);
    }
    return doc;
}

StratifiedComplex load_strat(const std::string& ref) {
    Document doc = load(ref);
    if (doc.kind == Document::Kind::strat) return doc.strat;
    throw ValidationError(ref + " is not a stratified complex");
}

SimplicialComplex load_complex(const std::string& ref) {
    Document doc = load(ref);
    if (doc.kind == Document::Kind::complex || doc.kind == Document::Kind::strat)
        return doc.complex;
    throw ValidationError(ref + " is not a simplicial complex");
}

Field parse_field(const std::string& name) {
    if (name == "q") return Field::Q;
    if (name == "f2") return Field::F2;
    throw ValidationError("--field must be q or f2");
}

void emit(const json& report, const std::string& out_path) {
    std::string text = report.dump(2);
    text += "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw ValidationError("cannot write " + out_path);
        out << text;
    }
}

void emit_raw(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw ValidationError("cannot write " + out_path);
        out << text;
    }
}

void summarize(const std::string& line) { std::cerr << line << "\n"; }

int run(int argc, char** argv) {
    CLI::App app{"stratified-complex toolkit"};
    app.require_subcommand(1);
    std::string out_path;
    std::string field_name_opt = "q";

    // validate
    auto* cmd_validate = app.add_subcommand("validate", "validate a document");
    std::string validate_ref;
    cmd_validate->add_option("ref", validate_ref)->required();

    // homology
    auto* cmd_homology = app.add_subcommand("homology", "Betti numbers of a complex");
    std::string homology_ref;
    cmd_homology->add_option("ref", homology_ref)->required();

    // strata-report
    auto* cmd_strata = app.add_subcommand("strata-report", "depth/dimension table");
    std::string strata_ref;
    cmd_strata->add_option("ref", strata_ref)->required();

    // exitpath
    auto* cmd_exit = app.add_subcommand("exitpath", "enter-path relative category");
    std::string exit_ref;
    cmd_exit->add_option("ref", exit_ref)->required();

    // sheaf-cohomology
    auto* cmd_sheaf = app.add_subcommand("sheaf-cohomology", "cohomology of a sheaf");
    std::string sheaf_ref;
    cmd_sheaf->add_option("ref", sheaf_ref)->required();

    // unzip
    auto* cmd_unzip = app.add_subcommand("unzip", "resolve along a closed union of strata");
    std::string unzip_ref;
    std::vector<std::string> deep;
    cmd_unzip->add_option("ref", unzip_ref)->required();
    cmd_unzip->add_option("--deep", deep, "deep stratum id (repeatable)");

    // unzip-tower
    auto* cmd_tower = app.add_subcommand("unzip-tower", "iterate the resolution to depth zero");
    std::string tower_ref;
    cmd_tower->add_option("ref", tower_ref)->required();

    // ran-poset
    auto* cmd_ran = app.add_subcommand("ran-poset", "partition / wreath / point-count posets");
    int ground_size = 0;
    std::string ran_poset_ref;
    int max_points = 0;
    cmd_ran->add_option("--ground", ground_size, "size of the index set");
    cmd_ran->add_option("--poset", ran_poset_ref, "label poset reference");
    cmd_ran->add_option("--max-points", max_points, "bound on the number of points");

    // constructions
    auto* cmd_cone = app.add_subcommand("cone", "cone of a poset/complex/stratified complex");
    std::string cone_ref, apex = "v*";
    cmd_cone->add_option("ref", cone_ref)->required();
    cmd_cone->add_option("--apex", apex, "apex identifier")->capture_default_str();

    auto* cmd_join = app.add_subcommand("join", "join of two documents of the same kind");
    std::string join_a, join_b;
    cmd_join->add_option("a", join_a)->required();
    cmd_join->add_option("b", join_b)->required();

    auto* cmd_product = app.add_subcommand("product", "product of two documents");
    std::string prod_a, prod_b;
    cmd_product->add_option("a", prod_a)->required();
    cmd_product->add_option("b", prod_b)->required();

    auto* cmd_subdivide = app.add_subcommand("subdivide", "barycentric subdivision + carrier");
    std::string subdivide_ref;
    cmd_subdivide->add_option("ref", subdivide_ref)->required();

    auto* cmd_restrict = app.add_subcommand("restrict", "restrict to consecutive strata");
    std::string restrict_ref;
    std::vector<std::string> restrict_strata_ids;
    cmd_restrict->add_option("ref", restrict_ref)->required();
    cmd_restrict->add_option("--strata", restrict_strata_ids, "stratum id (repeatable)");

    auto* cmd_mesh = app.add_subcommand("mesh-export", "OFF mesh for dimension <= 3");
    std::string mesh_ref, mesh_part = "unzip";
    cmd_mesh->add_option("ref", mesh_ref)->required();
    cmd_mesh->add_option("--part", mesh_part, "for decomposition bundles: unzip|link|cone_locus")
        ->capture_default_str();

    for (CLI::App* sc : {cmd_validate, cmd_homology, cmd_strata, cmd_exit, cmd_sheaf, cmd_unzip,
                         cmd_tower, cmd_ran, cmd_cone, cmd_join, cmd_product, cmd_subdivide,
                         cmd_restrict, cmd_mesh}) {
        sc->add_option("--out", out_path, "write the report to this path");
        sc->add_option("--field", field_name_opt, "coefficient field: q or f2");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    Field field = parse_field(field_name_opt);

    if (*cmd_validate) {
        Document doc = load(validate_ref);
        json report;
        bool ok = true;
        switch (doc.kind) {
            case Document::Kind::poset: {
                auto rep = validate_poset(doc.poset);
                report = poset_report_to_json(rep);
                ok = rep.ok();
                break;
            }
            case Document::Kind::complex: {
                auto rep = validate_complex(doc.complex);
                report = complex_report_to_json(rep);
                ok = rep.ok();
                break;
            }
            case Document::Kind::strat: {
                auto rep = validate_strat(doc.strat);
                report = strat_report_to_json(rep);
                ok = rep.ok();
                break;
            }
            case Document::Kind::sheaf: {
                auto rep = validate_sheaf(doc.sheaf);
                report = sheaf_report_to_json(rep);
                ok = rep.ok();
                break;
            }
            default:
                throw ValidationError("validate: unsupported document kind");
        }
        emit(report, out_path);
        summarize(ok ? "valid" : "validation failed");
        return ok ? 0 : 1;
    }

    if (*cmd_homology) {
        auto k = load_complex(homology_ref);
        auto h = homology(k, field);
        emit(homology_to_json(h), out_path);
        std::ostringstream os;
        os << "betti over " << strata::field_name(field) << ":";
        for (long long b : h.betti) os << " " << b;
        os << "  euler " << h.euler;
        summarize(os.str());
        return 0;
    }

    if (*cmd_strata) {
        auto x = load_strat(strata_ref);
        auto v = validate_strat(x);
        if (!v.ok()) {
            emit(strat_report_to_json(v), out_path);
            summarize("stratification invalid");
            return 1;
        }
        auto rep = depth_dim_report(x);
        emit(depth_report_to_json(rep, x), out_path);
        summarize(rep.monotone ? "depth map monotone" : "depth map NOT monotone");
        return 0;
    }

    if (*cmd_exit) {
        auto x = load_strat(exit_ref);
        auto ent = enter_category(x);
        auto verdict = is_groupoid(x);
        auto cls = classifying_space_check(x, field);
        json report;
        report["category"] = relcat_to_json(ent);
        report["groupoid"] = verdict.groupoid;
        if (verdict.witness)
            report["witness"] = json::array({verdict.witness->first, verdict.witness->second});
        report["classifying_space"] =
            json::object({{"nerve", homology_to_json(cls.nerve)},
                          {"space", homology_to_json(cls.space)},
                          {"equal", cls.equal}});
        emit(report, out_path);
        if (!cls.equal) {
            summarize("classifying-space comparison FAILED");
            return 2;
        }
        summarize(verdict.groupoid ? "groupoid" : "not a groupoid");
        return 0;
    }

    if (*cmd_sheaf) {
        Document doc = load(sheaf_ref);
        if (doc.kind != Document::Kind::sheaf)
            throw ValidationError(sheaf_ref + " is not a sheaf document");
        auto rep = validate_sheaf(doc.sheaf);
        if (!rep.ok()) {
            emit(sheaf_report_to_json(rep), out_path);
            summarize("sheaf invalid");
            return 1;
        }
        auto h = sheaf_cohomology(doc.sheaf);
        auto sec = global_sections(doc.sheaf);
        json report;
        report["validation"] = sheaf_report_to_json(rep);
        report["cohomology"] = cohomology_to_json(h);
        report["global_sections"] = sec.dim;
        report["locally_constant"] = is_locally_constant(doc.sheaf);
        emit(report, out_path);
        long long h0 = h.h.empty() ? 0 : h.h[0];
        if (h0 != sec.dim) {
            summarize("degree-zero cohomology disagrees with global sections");
            return 2;
        }
        std::ostringstream os;
        os << "h:";
        for (long long v : h.h) os << " " << v;
        summarize(os.str());
        return 0;
    }

    if (*cmd_unzip) {
        auto x = load_strat(unzip_ref);
        auto dec = unzip_once(x, std::vector<Id>(deep.begin(), deep.end()));
        auto led = decomposition_report(dec, field);
        json report = decomposition_to_json(dec);
        report["ledger"] = ledger_to_json(led);
        emit(report, out_path);
        if (!led.balanced) {
            summarize("ledger UNBALANCED: " + led.failure);
            return 2;
        }
        std::ostringstream os;
        os << "unzip: " << dec.unzip.complex.simplex_count() << " simplices, link "
           << dec.link.simplex_count() << ", ledger balanced";
        summarize(os.str());
        return 0;
    }

    if (*cmd_tower) {
        auto x = load_strat(tower_ref);
        auto stages = unzip_tower(x);
        json report;
        report["stages"] = json::array();
        bool balanced = true;
        for (const auto& dec : stages) {
            auto led = decomposition_report(dec, field);
            balanced = balanced && led.balanced;
            json stage = decomposition_to_json(dec);
            stage["ledger"] = ledger_to_json(led);
            report["stages"].push_back(stage);
        }
        report["length"] = stages.size();
        emit(report, out_path);
        if (!balanced) {
            summarize("tower ledger UNBALANCED");
            return 2;
        }
        summarize("tower length " + std::to_string(stages.size()));
        return 0;
    }

    if (*cmd_ran) {
        json report;
        if (max_points > 0) {
            if (ran_poset_ref.empty())
                throw ValidationError("ran-poset --max-points needs --poset");
            Document doc = load(ran_poset_ref);
            if (doc.kind != Document::Kind::poset)
                throw ValidationError("--poset must reference a poset document");
            auto r = ran_poset(doc.poset, max_points);
            report = ran_to_json(r);
            emit(report, out_path);
            summarize(r.verdict.ok() ? "relation is a poset" : "relation fails a poset axiom");
            return 0;
        }
        if (ground_size <= 0) throw ValidationError("ran-poset needs --ground or --max-points");
        std::vector<Id> ground;
        for (int i = 0; i < ground_size; ++i)
            ground.push_back(std::string(1, static_cast<char>('a' + i)));
        if (!ran_poset_ref.empty()) {
            Document doc = load(ran_poset_ref);
            if (doc.kind != Document::Kind::poset)
                throw ValidationError("--poset must reference a poset document");
            auto w = wreath_poset(ground, doc.poset);
            report = wreath_to_json(w);
            emit(report, out_path);
            summarize("wreath poset with " + std::to_string(w.poset.size()) + " elements");
            return 0;
        }
        Poset p = partitions_poset(ground);
        report = poset_to_json(p);
        emit(report, out_path);
        summarize("partition poset with " + std::to_string(p.size()) + " elements");
        return 0;
    }

    if (*cmd_cone) {
        Document doc = load(cone_ref);
        json report;
        switch (doc.kind) {
            case Document::Kind::poset:
                report = poset_to_json(cone(doc.poset, apex));
                break;
            case Document::Kind::complex:
                report = complex_to_json(cone_complex(apex, doc.complex));
                break;
            case Document::Kind::strat:
                report = strat_to_json(cone_strat(apex, doc.strat, apex + "*"));
                break;
            default:
                throw ValidationError("cone: unsupported document kind");
        }
        emit(report, out_path);
        summarize("cone built");
        return 0;
    }

    if (*cmd_join) {
        Document a = load(join_a), b = load(join_b);
        if (a.kind != b.kind) throw ValidationError("join: operands must have the same kind");
        json report;
        switch (a.kind) {
            case Document::Kind::poset:
                report = poset_to_json(join_poset(a.poset, b.poset));
                break;
            case Document::Kind::complex:
                report = complex_to_json(join_complex(a.complex, b.complex));
                break;
            case Document::Kind::strat:
                report = strat_to_json(join_strat(a.strat, b.strat));
                break;
            default:
                throw ValidationError("join: unsupported document kind");
        }
        emit(report, out_path);
        summarize("join built");
        return 0;
    }

    if (*cmd_product) {
        Document a = load(prod_a), b = load(prod_b);
        if (a.kind != b.kind) throw ValidationError("product: operands must have the same kind");
        json report;
        switch (a.kind) {
            case Document::Kind::poset:
                report = poset_to_json(product(a.poset, b.poset));
                break;
            case Document::Kind::complex:
                report = complex_to_json(product_complex(a.complex, b.complex));
                break;
            case Document::Kind::strat:
                report = strat_to_json(product_strat(a.strat, b.strat));
                break;
            default:
                throw ValidationError("product: unsupported document kind");
        }
        emit(report, out_path);
        summarize("product built");
        return 0;
    }

    if (*cmd_subdivide) {
        auto k = load_complex(subdivide_ref);
        auto sd = subdivide(k);
        json report;
        report["complex"] = complex_to_json(sd.sd);
        json carrier = json::array();
        for (int v = 0; v < sd.sd.vertex_count(); ++v)
            carrier.push_back(json::array(
                {sd.sd.vertex_id(v), k.id_vector(sd.carrier[static_cast<size_t>(v)])}));
        report["carrier"] = carrier;
        emit(report, out_path);
        summarize("subdivision with " + std::to_string(sd.sd.simplex_count()) + " simplices");
        return 0;
    }

    if (*cmd_restrict) {
        auto x = load_strat(restrict_ref);
        auto r = restrict_strata(x, std::vector<Id>(restrict_strata_ids.begin(),
                                                    restrict_strata_ids.end()));
        emit(strat_to_json(r), out_path);
        summarize("restriction with " + std::to_string(r.complex.simplex_count()) + " simplices");
        return 0;
    }

    if (*cmd_mesh) {
        Document doc = load(mesh_ref);
        SimplicialComplex k;
        if (doc.kind == Document::Kind::decomposition) {
            if (mesh_part == "unzip")
                k = strat_from_json(doc.raw.at("unzip")).complex;
            else if (mesh_part == "link")
                k = complex_from_json(doc.raw.at("link"));
            else if (mesh_part == "cone_locus")
                k = complex_from_json(doc.raw.at("cone_locus"));
            else
                throw ValidationError("--part must be unzip, link or cone_locus");
        } else if (doc.kind == Document::Kind::complex || doc.kind == Document::Kind::strat) {
            k = doc.complex;
        } else {
            throw ValidationError("mesh-export: unsupported document kind");
        }
        emit_raw(off_export(k), out_path);
        summarize("OFF mesh with " + std::to_string(k.vertex_count()) + " vertices");
        return 0;
    }

    throw ValidationError("no command selected");
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const InternalError& e) {
        std::cerr << "internal invariant failure: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
