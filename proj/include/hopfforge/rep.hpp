/*
 * Copyright 2026 the hopfforge authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "hopfforge/families.hpp"
#include "hopfforge/poly.hpp"

namespace hopfforge {

/// Associative unital algebra by structure constants (no coalgebra data).
struct Algebra {
    Field F;
    int dim = 0;
    std::vector<std::vector<SparseVec>> mult;
    Vec unit;

    Vec basis_vec(int i) const;
    Vec mulv(const Vec& u, const Vec& v) const;
    Vec powv(const Vec& u, uint64_t e) const;
    Mat left_mult_matrix(const Vec& v) const;
    Mat right_mult_matrix(const Vec& v) const;
};

Algebra as_algebra(const HopfAlgebra& H);

/// Restriction to a subspace closed under multiplication, with the given
/// unit (a corner e A e or a block A e).
Algebra restrict_algebra(const Algebra& A, const Subspace& S, const Vec& unit);

struct QuotientAlgebra {
    Algebra alg;
    Mat P;                    // A -> A/I coordinates
    std::vector<Vec> section; // preimages of the quotient basis
};
QuotientAlgebra quotient_algebra(const Algebra& A, const Subspace& I);

/// Center as a commutative structure-constant algebra plus its basis in A.
std::pair<CommAlgebra, std::vector<Vec>> center(const Algebra& A);

/// Jacobson radical by the characteristic-p chain of characteristic-
/// polynomial-coefficient forms on the regular representation (the trace
/// form alone degenerates in char p).  Validated: the result is a nilpotent
/// two-sided ideal and the quotient has zero radical.
Subspace radical(const Algebra& A);

/// Left module as one action matrix per algebra basis element; the action
/// is checked against the multiplication table on construction.
struct ModulePresentation {
    int dim = 0;
    std::vector<Mat> act; // act[i] = action of e_i
    std::string origin;

    Mat act_of(const Algebra& A, const Vec& v) const;
};

ModulePresentation module_from_submodule(const Algebra& A, const Subspace& carrier,
                                         const std::string& origin);

struct SimpleInfo {
    ModulePresentation mod;
    int dim = 0;
    int block = 0;            // index of the central primitive idempotent of A/J
    int residue_degree = 1;   // dim of the block's center over F
    std::vector<Fe> grouplike_scalars; // for 1-dim simples of family algebras
};

struct RepContext {
    Algebra A;
    Subspace J;
    QuotientAlgebra bar;                // A/J
    std::vector<Vec> central_idem_bar;  // of A/J, in A/J coordinates
    std::vector<Vec> central_idem_lift; // sections in A (not idempotent, act well mod J)
    std::vector<SimpleInfo> simples;    // one per block of A/J
};

/// radical + semisimple quotient + simple modules.  With require_split, a
/// residue field larger than F raises ExtendField.
RepContext rep_context(const Algebra& A, bool require_split = true);

std::vector<SimpleInfo> simples(const Algebra& A);

/// Complete set of orthogonal primitive idempotents of A (lifted from A/J)
/// together with the projective indecomposables A f.
struct PrincipalDecomposition {
    std::vector<Vec> idempotents;
    std::vector<ModulePresentation> projectives;
    std::vector<Subspace> carriers;
    std::vector<int> top_block; // block of the head simple, per idempotent
};
PrincipalDecomposition principal_indecomposables(const RepContext& ctx);

struct CompositionSeries {
    std::vector<Subspace> layers; // M = L_0 > L_1 > ... > L_k = 0 (radical series)
    bool uniserial = false;
    std::vector<int> factor_block; // per layer when simple (uniserial); else -1
    std::vector<int> factor_dim;
    std::vector<int> factor_mult;  // composition multiplicity within the layer
    int length = 0;                // total composition length
};

CompositionSeries composition_series(const RepContext& ctx, const ModulePresentation& M);

/// multiplicity vector of the simples inside a J-killed (semisimple) module
std::vector<int> semisimple_multiplicities(const RepContext& ctx, const ModulePresentation& M);

struct ProjectiveReport {
    std::vector<Vec> idempotents;                // e_lambda or lifted f_i
    std::vector<ModulePresentation> projectives; // He as left modules
    std::vector<Subspace> carriers;              // He inside H
    std::vector<CharacterMap> characters;        // for the e_lambda path
    bool complete = false;                       // (+) He = H checked
    std::string path;                            // "character" or "kx"
};

/// Theorem-blocks path (nilpotent type, p not dividing |G|, G abelian:
/// e_lambda idempotents) or, for third type with x^p = x and G = <a> of
/// p-power order, the k[x]_p idempotent path.  Hypotheses are enforced.
ProjectiveReport projectives(const HopfAlgebra& H);

struct BlockInfo {
    Vec idempotent;
    int dim = 0;
    std::vector<int> simple_dims;          // one entry per iso class
    std::vector<std::vector<int>> cartan;  // rows/cols indexed like simple_dims
    std::string tag;                       // "taft-like", "matrix-like", "other", or ""
    std::optional<Fe> w;                   // scalar of a^N e_i (non-nilpotent H_R data)
};

struct BlockReport {
    std::vector<BlockInfo> blocks;
    // nilpotent family algebras with semisimple coradical:
    bool orbit_partition_checked = false;
    bool orbit_partition_matches = false;
    // non-nilpotent H_R data:
    std::vector<int> chi_kernel; // the subgroup Z = ker(chi)
};

BlockReport blocks(const HopfAlgebra& H);

/// Morita-invariant comparison (simple count, dims, Cartan matrix) against
/// the Taft algebra Gamma_{N,q} and against M_N(k).
std::string block_identify(const BlockInfo& block, const Field& F, int N, Fe q);

/// Lagrange idempotents e_c of k[x]/(x^p - x), as coefficient vectors in
/// the basis 1, x, ..., x^{p-1}.
std::vector<Vec> kx_decompose(const Field& F);

/// evaluate a polynomial (coefficients low-first) at an algebra element
Vec eval_poly_at(const HopfAlgebra& H, const FPoly& f, const Vec& x);

struct SubhopfReport {
    uint32_t p = 0;
    int r = 0;
    int dim = 0;
    int num_projectives = 0;
    int projective_dim = 0;
    bool flags_are_radical_series = true;
    bool uniserial = true;
    bool layer_scalars_match = true; // x acts on layer i of Ae_c by c - i
    bool single_block = false;
};

/// The third-type algebra with G = <a> cyclic of order p^r and alpha = 0:
/// decomposition A = (+) A e_c, the flags P_c^i = <y^j e_c : j >= i> with
/// y = 1 - a, their layer scalars, and indecomposability.
SubhopfReport subhopf_report(uint32_t p, int r, const Field& F);

} // namespace hopfforge
