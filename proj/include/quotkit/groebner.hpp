// Groebner bases for submodules of graded free modules, with syzygies.
//
// Plain Buchberger with the normal selection strategy. The output basis is
// reduced, monic and sorted, so identical input always yields the identical
// basis. Every basis element carries its expression in the input generators;
// syzygy extraction and module arithmetic (intersection, colon, saturation)
// are built on that tracking.
#pragma once

#include <vector>

#include "quotkit/freemodule.hpp"

namespace quotkit {

struct GroebnerBasis {
  FreeModule mod;
  TermOrder order = TermOrder::GrevLex;
  std::vector<Vec> elems;       // reduced, monic, ascending leading terms
  std::vector<ModTerm> leads;   // cached leading terms of elems
  // tracking[k][l]: elems[k] = sum_l tracking[k][l] * input_generator[l]
  std::vector<std::vector<MultiPoly>> tracking;
  int input_count = 0;

  bool empty() const { return elems.empty(); }
};

GroebnerBasis buchberger(const FreeModule& F, const std::vector<Vec>& gens,
                         TermOrder ord = TermOrder::GrevLex);

// Remainder of v on division by gb. If quotients is non-null it receives one
// polynomial per basis element with v = sum quotients[k]*elems[k] + remainder.
Vec normal_form(const Vec& v, const GroebnerBasis& gb,
                std::vector<MultiPoly>* quotients = nullptr);

inline bool in_module(const Vec& v, const GroebnerBasis& gb) {
  return vec_is_zero(normal_form(v, gb));
}

// Generators of the syzygy module of gb.elems (Schreyer construction).
// The ambient free module has one component per basis element, twisted by its
// degree when the basis is homogeneous.
struct SyzygyModule {
  FreeModule mod;
  std::vector<Vec> gens;
};
SyzygyModule schreyer_syzygies(const GroebnerBasis& gb);

// Generators of the syzygies of an arbitrary generator list.
SyzygyModule syzygies(const FreeModule& F, const std::vector<Vec>& gens,
                      TermOrder ord = TermOrder::GrevLex);

// Generators of <a_1..a_s> intersected with <b_1..b_t>.
std::vector<Vec> intersect_modules(const FreeModule& F, const std::vector<Vec>& a,
                                   const std::vector<Vec>& b,
                                   TermOrder ord = TermOrder::GrevLex);

// Generators of (U : f) = { v : f*v in U }.
std::vector<Vec> colon_by_poly(const FreeModule& F, const std::vector<Vec>& u,
                               const MultiPoly& f, TermOrder ord = TermOrder::GrevLex);

// Generators of the saturation (U : m^infinity) with m = (fiber variables).
std::vector<Vec> saturate_submodule(const FreeModule& F, const std::vector<Vec>& u,
                                    TermOrder ord = TermOrder::GrevLex);

// Minimal generating subset of a homogeneous generator list (Nakayama greedy).
std::vector<Vec> minimal_generators(const FreeModule& F, const std::vector<Vec>& gens,
                                    TermOrder ord = TermOrder::GrevLex);

// Reduced-GB equality of the submodules generated by a and b.
bool same_submodule(const FreeModule& F, const std::vector<Vec>& a, const std::vector<Vec>& b,
                    TermOrder ord = TermOrder::GrevLex);

}  // namespace quotkit
