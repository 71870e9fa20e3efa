#ifndef QUIVERCERT_SEARCH_HPP
#define QUIVERCERT_SEARCH_HPP

// Certified lattice searches: exceptional-class enumeration in boxes,
// nonexistence certificates for orthogonal lattices, numerical
// nonextendability of a class, and the Jordan-Hoelder violation report.

#include <optional>

#include "ktheory.hpp"

namespace qvc {

// Certificate that a lattice contains no class with chi(v, v) = 1.
//   zero_form: the symmetrized restricted Gram vanishes, so chi(v,v) = 0
//              identically. Proof strength.
//   modular:   chi(v,v) = 1 (mod m) has no solution; all m^rank residue
//              vectors were enumerated. Proof strength.
//   box:       the coefficient box |c_k| <= bound is empty. Evidence only.
struct Certificate {
    std::string kind;  // "zero_form" | "modular" | "box"
    int modulus = 0;           // modular only
    long long box_bound = 0;   // box only
    bool is_proof() const { return kind == "zero_form" || kind == "modular"; }
};

// All exceptional classes v = sum c_k u_k with |c_k| <= bound, chi(v,v) = 1,
// in lexicographic order of the coefficient vectors. The box is walked shard
// by shard along the leading coordinate; shards are merged in order, so the
// output is deterministic.
std::vector<KClass> enumerate_exceptional_classes(const IMat& basis, const IMat& g, long long bound);

// Strongest proof-strength certificate for the lattice spanned by the basis
// rows: zero-form first, then moduli 2..modulus_cap. Returns nothing when
// neither applies (the caller falls back to a box search).
std::optional<Certificate> nonexistence_certificate(const IMat& basis, const IMat& g, int modulus_cap);

// One side of the extendability question for a class v. "left" examines the
// left orthogonal { u : chi(u, v) = 0 } (candidates following v), "right"
// the right orthogonal { u : chi(v, u) = 0 } (candidates preceding v).
struct SideResult {
    std::string side;
    IMat basis;       // canonical HNF rows
    IMat restricted;  // Gram on the basis
    Certificate cert;
    std::optional<KClass> witness;  // an extending exceptional class, if one was found

    bool certified() const { return cert.is_proof() && !witness; }
};

struct NonextResult {
    KClass cls;
    SideResult left, right;
    // "numerically nonextendable" (both sides proof-certified),
    // "extendable" (a witness was found), or bounded evidence only.
    std::string verdict;
    bool verified = false;
};

// Requires is_exceptional_class(v, g); throws InputError otherwise.
NonextResult certify_nonextendable(const KClass& v, const IMat& g, long long box_bound, int modulus_cap);

struct CandidateResult {
    KClass cls;
    bool exceptional = false;
    std::optional<NonextResult> nonext;
};

struct SurveyEntry {
    KClass cls;
    bool extendable = false;
    std::optional<KClass> witness;
    bool nonextendable_certified = false;
};

struct JHResult {
    std::vector<KClass> full_seq;  // projective classes, sinks first
    bool full_exceptional = false;
    Int full_det = 0;

    std::vector<CandidateResult> candidates;
    bool witnessed = false;
    int winner = -1;  // index of the certified candidate

    // Bi-orthogonal remainder of the winning candidate.
    IMat remainder_basis;
    IMat remainder_restricted;
    std::optional<Certificate> remainder_cert;

    // Extendability survey of the full-lattice box; only run when no
    // candidates were supplied.
    bool surveyed = false;
    std::vector<SurveyEntry> survey;

    std::string message;
};

// Built-in candidate classes for named quivers (the bondal spec ships with
// the class (1,1,1)); empty otherwise.
std::vector<KClass> builtin_candidates(const BoundQuiver& bq);

// Assembles the two decompositions and certifies the violation: the full
// projective sequence of length #vertices against a length-1 sequence whose
// bi-orthogonal remainder provably contains no exceptional class. Candidates
// are supplied, not discovered; with none, a survey of the box is reported
// instead and no violation is claimed.
JHResult certify_jh_violation(const AlgebraPtr& alg, const IMat& g, const std::vector<KClass>& candidates,
                              long long box_bound, int modulus_cap);

}  // namespace qvc

#endif
