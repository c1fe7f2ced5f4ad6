#pragma once

#include <json.hpp>

#include "fusedhecke/bratteli.hpp"
#include "fusedhecke/conjectures.hpp"
#include "fusedhecke/fused.hpp"
#include "fusedhecke/seminormal.hpp"

namespace fh {

using json = nlohmann::ordered_json;

json poly_to_json(const IntPoly& p);
json to_json(const RatFunc& f);
json to_json(const Perm& w);
json to_json(const FusedPerm& f);
json to_json(const Partition& p);
json to_json(const Tableau& t);
json to_json(const BratteliDiagram& d);
json to_json(const ConjReport& r);

template <class Q>
json to_json(const HeckeElem<Q>& e);
template <class Q>
json to_json(const FusedElem<Q>& e);

template <>
json to_json<SymbolicQ>(const HeckeElem<SymbolicQ>& e);
template <>
json to_json<SymbolicQ>(const FusedElem<SymbolicQ>& e);

json to_json(const Mat<SymbolicQ>& m);

// Parses "[[1,0],[0,1]]" style matrices.
FusedPerm fused_perm_from_json(const std::string& text);

} // namespace fh
