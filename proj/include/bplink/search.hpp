#pragma once

// Depth-first enumeration of all canonical exponent sequences in a given
// link dimension whose links both satisfy the existence inequality and are
// homotopy spheres, plus the closed-form infinite family generators and
// the single-sequence classification pipeline.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bplink/ke.hpp"
#include "bplink/moduli.hpp"
#include "bplink/signature.hpp"
#include "bplink/topology.hpp"

namespace bplink {

// Full classification of one sequence. Signature data is present exactly
// for homotopy spheres of dimension 3 mod 4, the Arf class is meaningful
// exactly for homotopy spheres of dimension 1 mod 4.
struct EnumerationRecord {
    ExponentSequence seq;
    KECertificate cert;
    SphereVerdict sphere;
    ArfReport arf;
    std::optional<BigInt> tau;
    std::optional<BigInt> bp_class;
    std::optional<BigInt> bp_unoriented;
    std::optional<BigInt> moduli_real_dim;
    bool contact_excluded = false;
};

struct ClassifyOptions {
    PairMode pair_mode = PairMode::IncludeDiagonal;
    SignatureMethod signature_method = SignatureMethod::PolynomialDP;
    bool with_moduli = true;
    BigInt brute_budget = BigInt(100'000'000);
    std::uint64_t dp_memory_budget = 2'000'000'000ull;
    BigInt zagier_n_cap = BigInt(1'000'000);
};

// check_ke + sphere test + (dimension-dependent) signature/Arf + moduli +
// contact exclusion. Requires m >= 4. Runs regardless of whether the
// existence certificate passes.
EnumerationRecord classify(const ExponentSequence& seq, const ClassifyOptions& options = {});

// Sylvester's sequence c_1 = 2, c_{k+1} = c_1 ... c_k + 1.
BigInt sylvester(unsigned k);

enum class FamilyKind {
    TailRange,     // (c_1, ..., c_{m-1}, a_m) with c_m - c_{m-1} < a_m < c_m
    ModuliGiant,   // (c_1, ..., c_{m-1}, (c_{m-1} - 2) c_{m-1})
    KervaireEven,  // (2 c_1, ..., 2 c_{m-2}, 2, p) with prime p in (2 c_{m-2}, 2 c_{m-1} - 2)
};

// Emits the candidates of the chosen closed-form family, filtered so that
// every emitted sequence passes check_ke.
std::vector<ExponentSequence> generate_family(FamilyKind kind, unsigned m);

struct SearchCheckpoint {
    long dimension = 0;
    PairMode pair_mode = PairMode::IncludeDiagonal;
    std::vector<std::int64_t> last_completed_prefix;
    BigInt emitted_total = 0;
    BigInt alternate_total = 0;
    std::map<std::string, BigInt> class_counts;
    BigInt contact_violations = 0;
    BigInt tau_mod8_violations = 0;
};

struct EnumerateOptions {
    PairMode pair_mode = PairMode::IncludeDiagonal;
    unsigned jobs = 1;
    std::optional<std::int64_t> max_last;  // cap on the final entry: partial run
    std::string checkpoint_path;           // empty: no checkpointing
    std::uint64_t halt_after_units = 0;    // stop after this many search units (0: run all)
    bool with_moduli = true;
};

struct EnumerationSummary {
    long link_dim = 0;
    PairMode pair_mode = PairMode::IncludeDiagonal;
    BigInt total = 0;            // records emitted under pair_mode
    BigInt alternate_total = 0;  // total under the other pair mode
    std::map<std::string, BigInt> class_counts;
    bool partial = false;  // max_last was set or the run was halted early
    BigInt contact_violations = 0;
    BigInt tau_mod8_violations = 0;
};

// Emits, in strictly increasing lexicographic order, every canonical
// sequence of length m = (link_dim + 3) / 2 that passes check_ke under
// pair_mode and whose link is a homotopy sphere. The sink runs on the
// writer thread. Search units are the (m-1)-entry prefixes; a checkpoint
// written after a completed unit can resume the run so that the
// concatenated record stream is identical to an uninterrupted one.
EnumerationSummary enumerate(long link_dim, const EnumerateOptions& options,
                             const std::function<void(const EnumerationRecord&)>& sink);

// Label used in per-class tallies: the oriented bP class for dimensions
// 3 mod 4, the Arf class otherwise.
std::string class_label(const EnumerationRecord& record);

}
