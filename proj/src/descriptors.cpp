#include "cupcube/descriptors.hpp"

#include <fstream>

namespace cupcube::io {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw InputError("descriptor: " + msg); }

i64 get_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) bad(std::string("missing integer '") + key + "'");
    return j[key].get<i64>();
}

IntMat mat_of(const json& j, i64 n) {
    if (!j.is_array() || j.empty()) bad("matrix must be a non-empty array of rows");
    int rows = int(j.size()), cols = int(j[0].size());
    IntMat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (int(j[std::size_t(i)].size()) != cols) bad("ragged matrix");
        for (int c = 0; c < cols; ++c) m(i, c) = mod_reduce(j[std::size_t(i)][std::size_t(c)].get<i64>(), n);
    }
    return m;
}

}  // namespace

std::shared_ptr<const FiniteGroup> load_group(const json& j) {
    std::string kind = j.value("kind", "");
    if (kind == "cyclic") return std::make_shared<FiniteGroup>(FiniteGroup::cyclic(int(get_int(j, "order"))));
    if (kind == "symmetric3") return std::make_shared<FiniteGroup>(FiniteGroup::symmetric3());
    if (kind == "permutation") {
        int degree = int(get_int(j, "degree"));
        std::vector<std::pair<std::string, std::vector<int>>> gens;
        if (!j.contains("generators") || !j["generators"].is_object()) bad("permutation group needs generators");
        for (auto& [name, images] : j["generators"].items()) {
            std::vector<int> img;
            for (const auto& v : images) img.push_back(v.get<int>());
            gens.push_back({name, img});
        }
        return std::make_shared<FiniteGroup>(FiniteGroup::from_permutations(degree, gens));
    }
    if (kind == "table") {
        std::vector<std::vector<int>> table;
        for (const auto& row : j.at("mult")) {
            std::vector<int> r;
            for (const auto& v : row) r.push_back(v.get<int>());
            table.push_back(r);
        }
        std::vector<std::string> names;
        if (j.contains("names"))
            for (const auto& v : j["names"]) names.push_back(v.get<std::string>());
        return std::make_shared<FiniteGroup>(FiniteGroup::from_table(table, names));
    }
    bad("group kind must be cyclic | symmetric3 | permutation | table");
}

GModule load_module(const json& j, std::shared_ptr<const FiniteGroup> g) {
    std::string kind = j.value("kind", "matrix");
    i64 n = get_int(j, "n");
    if (kind == "quotring") {
        Vec p;
        for (const auto& v : j.at("p")) p.push_back(v.get<i64>());
        QuotRing ring(n, p);
        std::vector<Vec> units;
        for (const auto& u : j.at("action")) {
            Vec uv;
            for (const auto& v : u) uv.push_back(v.get<i64>());
            units.push_back(uv);
        }
        if (units.size() != g->generators().size()) bad("need one action unit per group generator");
        return GModule::quotring_module(std::move(g), ring, units);
    }
    if (kind == "matrix") {
        int rank = int(get_int(j, "rank"));
        std::vector<IntMat> mats;
        for (const auto& m : j.at("action")) mats.push_back(mat_of(m, n));
        return GModule::from_generator_matrices(std::move(g), n, rank, mats);
    }
    if (kind == "trivial") return GModule::trivial(std::move(g), n, int(get_int(j, "rank")));
    bad("module kind must be quotring | matrix | trivial");
}

TrilinearPsi load_psi(const json& j, const GModule& m1, const GModule& m2, const GModule& m3) {
    std::string kind = j.value("kind", "");
    TrilinearPsi psi = [&] {
        if (kind == "product") {
            if (!m1.ring()) bad("product psi needs a quotring module");
            return TrilinearPsi::product(*m1.ring());
        }
        if (kind == "tensor") {
            std::vector<i64> coeffs;
            for (const auto& plane : j.at("coeffs"))
                for (const auto& row : plane)
                    for (const auto& v : row) coeffs.push_back(v.get<i64>());
            return TrilinearPsi::tensor(get_int(j, "n"), m1.rank(), m2.rank(), m3.rank(), coeffs);
        }
        bad("psi kind must be product | tensor");
    }();
    psi.check(m1, m2, m3);
    return psi;
}

Representation load_representation(const json& j, const LinkDiagram& d, const FiniteGroup& g) {
    Representation f;
    auto elem_of = [&](const json& v) -> int {
        if (v.is_number_integer()) {
            i64 idx = v.get<i64>();
            if (idx < 0 || idx >= g.order()) bad("representation: element index out of range");
            return int(idx);
        }
        if (v.is_string()) {
            if (auto e = g.element_by_name(v.get<std::string>())) return *e;
            bad("representation: unknown element name '" + v.get<std::string>() + "'");
        }
        bad("representation: element must be an index or a name");
    };
    if (j.is_array()) {
        for (const auto& v : j) f.arc_to_g.push_back(elem_of(v));
    } else if (j.contains("arcs")) {
        for (const auto& v : j["arcs"]) f.arc_to_g.push_back(elem_of(v));
    } else if (j.contains("constant")) {
        f = Representation::constant(d, elem_of(j["constant"]));
    } else {
        bad("representation: need arcs array or constant");
    }
    if (int(f.arc_to_g.size()) != d.arc_count()) bad("representation: wrong arc count");
    return f;
}

RMoveSite load_site(const json& j) {
    RMoveSite s;
    s.kind = j.value("kind", "");
    s.edge = j.value("edge", i64(0));
    s.target = j.value("target", i64(0));
    s.face = j.value("face", -1);
    s.crossing = j.value("crossing", -1);
    s.sign = j.value("sign", 1);
    s.under_first = j.value("under_first", true);
    s.over = j.value("over", true);
    return s;
}

json diagram_info(const LinkDiagram& d) {
    json j;
    j["schema"] = kSchemaVersion;
    j["conventions"] = kConventionVersion;
    j["crossings"] = json::array();
    for (int c = 0; c < d.crossing_count(); ++c) {
        const auto& t = d.crossing(c).e;
        j["crossings"].push_back({t[0], t[1], t[2], t[3]});
    }
    j["signs"] = json::array();
    for (int c = 0; c < d.crossing_count(); ++c) j["signs"].push_back(d.sign(c));
    j["writhe"] = d.writhe();
    j["components"] = d.component_count();
    j["arcs"] = json::array();
    for (int a = 0; a < d.arc_count(); ++a) {
        json arc = json::array();
        for (int e : d.arc_edges(a)) arc.push_back(d.edge_label(e));
        j["arcs"].push_back(arc);
    }
    j["faces"] = json::array();
    for (int f = 0; f < d.face_count(); ++f) {
        json face = json::array();
        for (const FaceDart& dart : d.face_boundary(f))
            face.push_back({{"edge", d.edge_label(dart.edge)},
                            {"side", dart.side == Side::left ? "L" : "R"}});
        j["faces"].push_back(face);
    }
    j["unbounded_face"] = d.unbounded_face();
    json wirt = json::array();
    for (const auto& r : d.wirtinger().relations)
        wirt.push_back({{"crossing", r.crossing},
                        {"under_in", r.under_in_arc},
                        {"over", r.over_arc},
                        {"under_out", r.under_out_arc},
                        {"sign", r.sign}});
    j["wirtinger"] = wirt;
    return j;
}

json coloring_info(const ColoringSpace& space) {
    json j;
    j["schema"] = kSchemaVersion;
    j["conventions"] = kConventionVersion;
    j["col_size"] = u128_to_string(space.count());
    j["col_red_size"] = u128_to_string(space.reduced_count());
    j["module_size"] = u128_to_string(space.module().size());
    auto basis_json = [](const ModuleBasis& b) {
        json out;
        out["orders"] = b.orders();
        out["generators"] = json::array();
        for (const Vec& g : b.gens()) out["generators"].push_back(g);
        return out;
    };
    j["full"] = basis_json(space.full());
    j["reduced"] = basis_json(space.reduced());
    return j;
}

json cubic_form_info(const CubicForm& f) {
    json j;
    j["codomain_n"] = f.codomain.modulus();
    j["codomain_p"] = f.codomain.poly();
    for (int s = 0; s < 3; ++s) j["orders"].push_back(f.orders[std::size_t(s)]);
    j["tensor"] = json::array();
    for (const Vec& v : f.tensor) j["tensor"].push_back(v);
    j["zero"] = f.is_zero();
    return j;
}

json branched_info(const BranchedResult& r) {
    QuotRing a = QuotRing::eisenstein(r.n);
    json j;
    j["schema"] = kSchemaVersion;
    j["conventions"] = kConventionVersion;
    if (!r.knot.empty()) j["knot"] = r.knot;
    j["n"] = r.n;
    j["reduced_orders"] = r.reduced_orders;
    j["rank_one_over_A"] = r.rank_one;
    j["lambda"] = r.lambda;
    j["lambda_canonical"] = r.lambda_canonical;
    j["orbit_size"] = r.orbit_size;
    j["form"] = r.pretty;
    j["tensor"] = cubic_form_info(r.form);
    return j;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw InputError("bad JSON in " + path + ": " + e.what());
    }
    return j;
}

LinkDiagram load_diagram_arg(const std::string& arg) {
    if (arg.find('X') != std::string::npos || arg.find('x') != std::string::npos ||
        arg.find("[[") != std::string::npos)
        return LinkDiagram::parse(arg);
    std::ifstream in(arg);
    if (!in) throw InputError("cannot open diagram file " + arg);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return LinkDiagram::parse(text);
}

}  // namespace cupcube::io
