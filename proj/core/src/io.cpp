#include "strata/io.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace strata {

namespace {

std::vector<std::vector<Id>> maximal_simplices(const SimplicialComplex& k) {
    std::vector<std::vector<Id>> out;
    for (int a = 0; a < k.simplex_count(); ++a) {
        const auto& sa = k.simplex(a);
        bool maximal = true;
        for (int b = 0; b < k.simplex_count() && maximal; ++b) {
            if (a == b) continue;
            const auto& sb = k.simplex(b);
            if (sb.size() > sa.size() && std::includes(sb.begin(), sb.end(), sa.begin(), sa.end()))
                maximal = false;
        }
        if (maximal) out.push_back(k.id_vector(sa));
    }
    return out;
}

}  // namespace

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(boost::multiprecision::cpp_int(s));
        boost::multiprecision::cpp_int num(s.substr(0, slash));
        boost::multiprecision::cpp_int den(s.substr(slash + 1));
        if (den == 0) throw ValidationError("rational with zero denominator: " + s);
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw ValidationError("malformed rational: " + s);
    }
}

std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

json poset_to_json(const Poset& p) {
    json doc;
    std::vector<Id> elems = p.elements();
    std::sort(elems.begin(), elems.end());
    doc["elements"] = elems;
    std::vector<std::pair<Id, Id>> pairs;
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
            if (a != b && p.leq(a, b)) pairs.emplace_back(p.id_of(a), p.id_of(b));
    std::sort(pairs.begin(), pairs.end());
    json rel = json::array();
    for (const auto& [a, b] : pairs) rel.push_back(json::array({a, b}));
    doc["leq"] = rel;
    return doc;
}

Poset poset_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("elements") || !doc.contains("leq"))
        throw ValidationError("poset document needs \"elements\" and \"leq\"");
    for (const auto& [key, value] : doc.items())
        if (key != "elements" && key != "leq")
            throw ValidationError("poset document: unknown top-level key \"" + key + "\"");
    std::vector<Id> elems = doc.at("elements").get<std::vector<Id>>();
    std::vector<std::pair<Id, Id>> rel;
    for (const auto& pair : doc.at("leq")) {
        if (!pair.is_array() || pair.size() != 2)
            throw ValidationError("poset document: leq entries must be pairs");
        rel.emplace_back(pair[0].get<Id>(), pair[1].get<Id>());
    }
    return Poset::from_relations(elems, rel);
}

json complex_to_json(const SimplicialComplex& k) {
    json doc;
    doc["vertices"] = k.vertices();
    json simps = json::array();
    for (const auto& s : maximal_simplices(k)) simps.push_back(s);
    doc["simplices"] = simps;
    return doc;
}

SimplicialComplex complex_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("simplices"))
        throw ValidationError("complex document needs \"vertices\" and \"simplices\"");
    for (const auto& [key, value] : doc.items())
        if (key != "vertices" && key != "simplices")
            throw ValidationError("complex document: unknown top-level key \"" + key + "\"");
    std::vector<Id> verts = doc.at("vertices").get<std::vector<Id>>();
    std::vector<std::vector<Id>> simplices;
    for (const auto& s : doc.at("simplices")) simplices.push_back(s.get<std::vector<Id>>());
    return SimplicialComplex::from_maximal(verts, simplices);
}

json strat_to_json(const StratifiedComplex& x) {
    json doc;
    doc["complex"] = complex_to_json(x.complex);
    doc["poset"] = poset_to_json(x.strata);
    json assign = json::array();
    for (int s = 0; s < x.complex.simplex_count(); ++s)
        assign.push_back(json::array(
            {json(x.complex.id_vector(x.complex.simplex(s))), json(x.stratum_id(s))}));
    doc["assignment"] = assign;
    return doc;
}

StratifiedComplex strat_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("complex") || !doc.contains("poset") ||
        !doc.contains("assignment"))
        throw ValidationError(
            "stratified complex document needs \"complex\", \"poset\", \"assignment\"");
    StratifiedComplex x;
    x.complex = complex_from_json(doc.at("complex"));
    x.strata = poset_from_json(doc.at("poset"));
    x.assignment.assign(static_cast<size_t>(x.complex.simplex_count()), -1);
    for (const auto& entry : doc.at("assignment")) {
        if (!entry.is_array() || entry.size() != 2)
            throw ValidationError("assignment entries must be [simplex, stratum] pairs");
        std::vector<Id> simplex = entry[0].get<std::vector<Id>>();
        Id stratum = entry[1].get<Id>();
        int sid = x.complex.index_of(x.complex.to_indices(simplex));
        if (sid < 0) throw ValidationError("assignment references unknown simplex");
        int p = x.strata.index_of(stratum);
        if (p < 0) throw ValidationError("assignment references unknown stratum: " + stratum);
        x.assignment[static_cast<size_t>(sid)] = p;
    }
    for (int s = 0; s < x.complex.simplex_count(); ++s)
        if (x.assignment[static_cast<size_t>(s)] < 0)
            throw ValidationError("assignment missing for simplex " +
                                  x.complex.label(x.complex.simplex(s)));
    return x;
}

json sheaf_to_json(const Sheaf& f, const StratifiedComplex& base) {
    json doc;
    doc["base"] = strat_to_json(base);
    json dims = json::object();
    for (int e = 0; e < f.carrier.base.size(); ++e)
        dims[f.carrier.base.id_of(e)] = f.dims[static_cast<size_t>(e)];
    doc["dims"] = dims;
    json maps = json::array();
    for (const auto& [edge, m] : f.maps) {
        json rows = json::array();
        for (const auto& row : m) {
            json r = json::array();
            for (const auto& v : row) r.push_back(rat_to_string(v));
            rows.push_back(r);
        }
        maps.push_back(json::array(
            {json(f.carrier.base.id_of(edge.first)), json(f.carrier.base.id_of(edge.second)), rows}));
    }
    doc["maps"] = maps;
    return doc;
}

Sheaf sheaf_from_json(const json& doc, StratifiedComplex* base_out) {
    if (!doc.is_object() || !doc.contains("base") || !doc.contains("dims") || !doc.contains("maps"))
        throw ValidationError("sheaf document needs \"base\", \"dims\", \"maps\"");
    StratifiedComplex x = strat_from_json(doc.at("base"));
    Sheaf f;
    f.carrier = enter_category(x);
    f.dims.assign(static_cast<size_t>(f.carrier.base.size()), -1);
    for (const auto& [label, value] : doc.at("dims").items()) {
        int e = f.carrier.base.index_of(label);
        if (e < 0) throw ValidationError("sheaf dims reference unknown simplex: " + label);
        f.dims[static_cast<size_t>(e)] = value.get<int>();
    }
    for (int d : f.dims)
        if (d < 0) throw ValidationError("sheaf dims must cover every simplex");
    for (const auto& entry : doc.at("maps")) {
        if (!entry.is_array() || entry.size() != 3)
            throw ValidationError("sheaf maps entries must be [src, dst, matrix]");
        int a = f.carrier.base.index_of(entry[0].get<Id>());
        int b = f.carrier.base.index_of(entry[1].get<Id>());
        if (a < 0 || b < 0) throw ValidationError("sheaf map references unknown simplex");
        QMatrix m;
        for (const auto& row : entry[2]) {
            std::vector<Rat> r;
            for (const auto& v : row) r.push_back(rat_from_string(v.get<std::string>()));
            m.push_back(std::move(r));
        }
        f.maps.emplace(std::make_pair(a, b), std::move(m));
    }
    if (base_out) *base_out = std::move(x);
    return f;
}

json relcat_to_json(const RelativeCategory& c) {
    json doc;
    doc["poset"] = poset_to_json(c.base);
    std::vector<std::pair<Id, Id>> weak;
    for (const auto& [a, b] : c.weak) weak.emplace_back(c.base.id_of(a), c.base.id_of(b));
    std::sort(weak.begin(), weak.end());
    json w = json::array();
    for (const auto& [a, b] : weak) w.push_back(json::array({a, b}));
    doc["weak"] = w;
    return doc;
}

json homology_to_json(const HomologyProfile& h) {
    json doc;
    doc["field"] = field_name(h.field);
    doc["betti"] = h.betti;
    doc["euler"] = h.euler;
    return doc;
}

json poset_report_to_json(const PosetReport& r) {
    json doc;
    doc["ok"] = r.ok();
    doc["missing_reflexive"] = r.missing_reflexive;
    json anti = json::array();
    for (const auto& w : r.antisymmetry) anti.push_back(json::array({w[0], w[1]}));
    doc["antisymmetry"] = anti;
    json trans = json::array();
    for (const auto& w : r.transitivity) trans.push_back(json::array({w[0], w[1], w[2]}));
    doc["transitivity"] = trans;
    return doc;
}

json complex_report_to_json(const ComplexReport& r) {
    json doc;
    doc["ok"] = r.ok();
    json v = json::array();
    for (const auto& [simplex, face] : r.missing_faces)
        v.push_back(json::object({{"simplex", simplex}, {"missing_face", face}}));
    doc["missing_faces"] = v;
    return doc;
}

json strat_report_to_json(const StratReport& r) {
    json doc;
    doc["ok"] = r.ok();
    json v = json::array();
    for (const auto& [face, coface] : r.monotonicity)
        v.push_back(json::object({{"face", face}, {"coface", coface}}));
    doc["monotonicity"] = v;
    doc["empty_strata"] = r.empty_strata;
    return doc;
}

json sheaf_report_to_json(const SheafReport& r) {
    json doc;
    doc["ok"] = r.ok();
    doc["shapes_ok"] = r.shapes_ok;
    if (!r.shapes_ok) doc["shape_error"] = r.shape_error;
    doc["path_independent"] = r.path_independent;
    if (r.diamond)
        doc["diamond"] = json::array({(*r.diamond)[0], (*r.diamond)[1], (*r.diamond)[2],
                                      (*r.diamond)[3]});
    doc["w_inverting"] = r.w_inverting;
    if (r.non_invertible_weak)
        doc["non_invertible_weak"] =
            json::array({r.non_invertible_weak->first, r.non_invertible_weak->second});
    return doc;
}

json depth_report_to_json(const DepthDimReport& r, const StratifiedComplex& x) {
    json doc;
    json rows = json::array();
    for (int p = 0; p < x.strata.size(); ++p) {
        const auto& row = r.rows[static_cast<size_t>(p)];
        json j;
        j["stratum"] = row.stratum;
        j["empty"] = row.empty;
        if (!row.empty) {
            j["stratum_dim"] = row.stratum_dim;
            j["star_dim"] = row.star_dim;
            j["depth"] = row.depth;
            j["pure"] = row.pure;
            j["image"] = r.image[static_cast<size_t>(p)];
        }
        rows.push_back(j);
    }
    doc["strata"] = rows;
    doc["max_star_dim"] = r.max_star_dim;
    doc["monotone"] = r.monotone;
    json w = json::array();
    for (const auto& [a, b] : r.witnesses) w.push_back(json::array({a, b}));
    doc["witnesses"] = w;
    return doc;
}

json cohomology_to_json(const SheafCohomology& h) {
    json doc;
    doc["h"] = h.h;
    doc["euler"] = h.euler;
    return doc;
}

json ran_to_json(const RanRelation& r) {
    json doc;
    doc["elements"] = r.labels;
    json rel = json::array();
    for (size_t a = 0; a < r.leq.size(); ++a)
        for (size_t b = 0; b < r.leq.size(); ++b)
            if (a != b && r.leq[a][b]) rel.push_back(json::array({r.labels[a], r.labels[b]}));
    doc["leq"] = rel;
    doc["verdict"] = poset_report_to_json(r.verdict);
    return doc;
}

json wreath_to_json(const WreathPoset& w) {
    json doc;
    doc["poset"] = poset_to_json(w.poset);
    json proj_part = json::array();
    json proj_pow = json::array();
    for (int e = 0; e < w.poset.size(); ++e) {
        proj_part.push_back(json::array(
            {w.poset.id_of(e), w.partitions.id_of(w.to_partitions[static_cast<size_t>(e)])}));
        proj_pow.push_back(json::array(
            {w.poset.id_of(e), w.power.id_of(w.to_power[static_cast<size_t>(e)])}));
    }
    doc["to_partitions"] = proj_part;
    doc["to_power"] = proj_pow;
    return doc;
}

json ledger_to_json(const DecompositionLedger& led) {
    json doc;
    doc["balanced"] = led.balanced;
    if (!led.balanced) doc["failure"] = led.failure;
    doc["chi"] = json::object({{"k", led.chi_k},
                               {"neighborhood", led.chi_n},
                               {"complement", led.chi_u},
                               {"link", led.chi_link}});
    doc["betti"] = json::object({{"k", led.betti_k},
                                 {"sd2", led.betti_sd2},
                                 {"neighborhood", led.betti_n},
                                 {"deep", led.betti_y},
                                 {"complement", led.betti_u},
                                 {"unzip", led.betti_unzip},
                                 {"link", led.betti_link}});
    json mv = json::array();
    for (const auto& row : led.mv.rows) {
        mv.push_back(json::object({{"degree", row.degree},
                                   {"b_link", row.b_inter},
                                   {"b_n", row.b_a},
                                   {"b_u", row.b_b},
                                   {"b_x", row.b_x},
                                   {"rank_restriction", row.rank_restriction},
                                   {"rank_connecting", row.rank_connecting},
                                   {"chain_level", row.chain_level}}));
    }
    doc["mayer_vietoris"] = mv;
    return doc;
}

json decomposition_to_json(const UnzipDecomposition& dec) {
    json doc;
    doc["degenerate"] = dec.degenerate;
    doc["coarse_complement"] = dec.far_model;
    doc["unzip"] = strat_to_json(dec.unzip);
    doc["cone_locus"] = complex_to_json(dec.cone_locus);
    doc["link"] = complex_to_json(dec.link);
    json pi = json::array(), rho = json::array();
    for (int v = 0; v < dec.link.vertex_count(); ++v) {
        pi.push_back(json::array(
            {dec.link.vertex_id(v), dec.sd_cone_locus.vertex_id(dec.pi[static_cast<size_t>(v)])}));
        rho.push_back(json::array(
            {dec.link.vertex_id(v), dec.sd_unzip.vertex_id(dec.rho[static_cast<size_t>(v)])}));
    }
    doc["pi"] = pi;
    doc["rho"] = rho;
    doc["pi_simplicial"] = dec.pi_simplicial;
    doc["rho_simplicial"] = dec.rho_simplicial;
    return doc;
}

namespace {

// Top-level members of a structured label: "{a,b}" -> {"a","b"},
// "(a,b)" -> {"a","b"}, otherwise the label itself.
std::vector<std::string> label_members(const std::string& label) {
    if (label.size() < 2) return {label};
    char open = label.front();
    char close = label.back();
    if (!((open == '{' && close == '}') || (open == '(' && close == ')'))) return {label};
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (size_t i = 1; i + 1 < label.size(); ++i) {
        char c = label[i];
        if (c == '{' || c == '(') ++depth;
        if (c == '}' || c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

struct Vec3 {
    double x = 0, y = 0, z = 0;
};

Vec3 placement(const std::string& label, std::map<std::string, Vec3>& base,
               std::vector<std::string>& base_order) {
    auto members = label_members(label);
    if (members.size() == 1 && members[0] == label) {
        auto it = base.find(label);
        if (it != base.end()) return it->second;
        base_order.push_back(label);
        base.emplace(label, Vec3{});
        return Vec3{};
    }
    Vec3 acc;
    for (const auto& m : members) {
        Vec3 v = placement(m, base, base_order);
        acc.x += v.x;
        acc.y += v.y;
        acc.z += v.z;
    }
    acc.x /= static_cast<double>(members.size());
    acc.y /= static_cast<double>(members.size());
    acc.z /= static_cast<double>(members.size());
    return acc;
}

}  // namespace

std::string off_export(const SimplicialComplex& k) {
    if (k.dim() > 3) throw ValidationError("off_export: dimension must be <= 3");
    // First pass: find base labels, assign sphere coordinates by sorted order.
    std::map<std::string, Vec3> base;
    std::vector<std::string> base_order;
    for (const Id& v : k.vertices()) placement(v, base, base_order);
    std::sort(base_order.begin(), base_order.end());
    const double golden = 2.399963229728653;  // golden angle
    int nb = static_cast<int>(base_order.size());
    for (int i = 0; i < nb; ++i) {
        double z = nb == 1 ? 0.0 : -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(nb - 1);
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        double t = golden * static_cast<double>(i);
        base[base_order[static_cast<size_t>(i)]] = {r * std::cos(t), r * std::sin(t), z};
    }
    std::vector<Vec3> coords;
    for (const Id& v : k.vertices()) coords.push_back(placement(v, base, base_order));
    // Faces: triangles; if none, edges.
    std::vector<std::vector<int>> faces;
    for (const auto& s : k.simplices())
        if (s.size() == 3) faces.push_back(s);
    if (faces.empty())
        for (const auto& s : k.simplices())
            if (s.size() == 2) faces.push_back(s);
    std::ostringstream os;
    os << "OFF\n" << k.vertex_count() << " " << faces.size() << " 0\n";
    os.setf(std::ios::fixed);
    os.precision(6);
    for (const auto& c : coords) os << c.x << " " << c.y << " " << c.z << "\n";
    for (const auto& f : faces) {
        os << f.size();
        for (int v : f) os << " " << v;
        os << "\n";
    }
    return os.str();
}

}  // namespace strata
