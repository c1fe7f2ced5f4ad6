#include "fusedhecke/json_io.hpp"

namespace fh {

json poly_to_json(const IntPoly& p) {
    json arr = json::array();
    for (long e = 0; e <= p.degree(); ++e) {
        Int c = p.coeff(e);
        if (c != 0) arr.push_back(json::array({e, c.get_str()}));
    }
    return arr;
}

json to_json(const RatFunc& f) {
    return json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())},
                {"text", f.str()}};
}

json to_json(const Perm& w) {
    json arr = json::array();
    for (int v : w.one_line()) arr.push_back(v);
    return arr;
}

json to_json(const FusedPerm& f) {
    json arr = json::array();
    for (const auto& row : f.matrix()) arr.push_back(row);
    return arr;
}

json to_json(const Partition& p) {
    json arr = json::array();
    for (int v : p.parts) arr.push_back(v);
    return arr;
}

json to_json(const Tableau& t) {
    json rows = json::array();
    for (int r = 1; r <= t.shape.outer.length(); ++r) {
        json row = json::array();
        for (int c = 1; c <= t.shape.outer.part(r); ++c) {
            if (c <= t.shape.inner.part(r))
                row.push_back(nullptr);
            else
                row.push_back(t.at({r, c}));
        }
        rows.push_back(row);
    }
    return rows;
}

template <>
json to_json<SymbolicQ>(const HeckeElem<SymbolicQ>& e) {
    json arr = json::array();
    for (const auto& [w, c] : e.terms) arr.push_back(json::array({to_json(w), to_json(c)}));
    return arr;
}

template <>
json to_json<SymbolicQ>(const FusedElem<SymbolicQ>& e) {
    json arr = json::array();
    for (const auto& [f, c] : e.terms) arr.push_back(json::array({to_json(f), to_json(c)}));
    return arr;
}

json to_json(const Mat<SymbolicQ>& m) {
    json rows = json::array();
    for (int i = 0; i < m.n; ++i) {
        json row = json::array();
        for (int j = 0; j < m.n; ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

json to_json(const BratteliDiagram& d) {
    json levels = json::array();
    for (const auto& lvl : d.levels) {
        json l = json::array();
        for (const auto& v : lvl) l.push_back(json{{"partition", to_json(v.label)}, {"dim", v.dim}});
        levels.push_back(l);
    }
    json edges = json::array();
    for (const auto& lvl : d.edges) {
        json l = json::array();
        for (const auto& e : lvl) l.push_back(json::array({e.upper, e.lower}));
        edges.push_back(l);
    }
    return json{{"levels", levels}, {"edges", edges}};
}

json to_json(const ConjReport& r) {
    return json{{"k", r.k},
                {"N", r.N},
                {"centrality", to_string(r.centrality)},
                {"ideal_dim_expected", r.ideal_dim_expected},
                {"ideal_dim_computed", r.ideal_dim_computed},
                {"ideal_generation", to_string(r.ideal_generation)},
                {"kernel_membership", r.kernel_membership},
                {"tensor_kernel_checked", r.tensor_kernel_checked},
                {"q_mode", r.q_mode}};
}

FusedPerm fused_perm_from_json(const std::string& text) {
    json j = json::parse(text);
    require(j.is_array(), "expected a JSON matrix");
    std::vector<std::vector<int>> rows;
    for (const auto& row : j) {
        require(row.is_array(), "expected a JSON matrix");
        rows.push_back(row.get<std::vector<int>>());
    }
    return FusedPerm::from_matrix(rows);
}

} // namespace fh
