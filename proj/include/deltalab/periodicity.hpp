#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "deltalab/bitword.hpp"
#include "deltalab/stream.hpp"

namespace deltalab {

// Evidence that a stream looks (p, n0)-periodic: w(n+p) = w(n) held for all
// n0 <= n < evidence_len - p, with at least two full periods of window.
struct PeriodCertificate {
    std::size_t offset = 0;      // n0
    std::size_t period = 1;      // p >= 1
    std::size_t evidence_len = 0;  // >= offset + 2*period
};

// True iff the certificate's relation holds positionwise on the word.
bool verify_certificate(const BitWord& w, const PeriodCertificate& cert);

// Smallest (period, offset) pair, in that lexicographic order, that holds on
// the whole word with two full periods of evidence; nullopt when no pair
// within the bounds qualifies.
std::optional<PeriodCertificate> detect_period(const BitWord& w, std::size_t max_period,
                                               std::size_t max_offset);

// Certificate read off an evp(prefix, cycle) expression and re-verified on
// its own materialization. Throws std::invalid_argument for other shapes.
PeriodCertificate certificate_of_evp(const ExprPtr& e);

// True iff the d+1-block difference of the stream satisfies the same
// (period, offset) on the window shrunk by d. Throws
// insufficient_prefix_error when the shrunk window is under two periods.
bool check_strong_preservation(const PeriodCertificate& cert, std::size_t d, const ExprPtr& e);

// Vertical periodicity witness for an orbit: rows N1 and N2 = N1 + k are
// equal from column `offset` on, with N1, N2 powers of two congruent mod
// the stream period.
struct OrbitPeriodWitness {
    std::size_t d = 1;
    std::size_t n1 = 1;
    std::size_t n2 = 2;
    std::size_t vertical_offset = 1;  // = n1
    std::size_t vertical_period = 1;  // = n2 - n1
    std::size_t window = 0;           // columns on which row equality was checked
};

// Constructs the witness for a certified stream: the least m1 (then m2) with
// 2^m1 > offset and 2^m1 = 2^m2 (mod period), rows checked on `window`
// columns from the offset via the stride-2^m fast path. A verification
// failure throws contradiction_error.
OrbitPeriodWitness orbit_witness_from_period(const ExprPtr& e, const PeriodCertificate& cert,
                                             std::size_t d, std::size_t window);

struct Fact {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct FactReport {
    std::vector<Fact> facts;

    bool all_pass() const;
    // One fact per line: "FACT <name> PASS|FAIL <detail>".
    std::string to_text() const;
};

// For p = 2^m: checks that the orbit of the point stream at p-1 returns to
// itself after p steps and that the row before consists of p ones.
// Throws insufficient_window_error for window < 2p.
FactReport point_orbit_facts(std::size_t p, std::size_t window);

// True iff the first `rows` orbit rows are pairwise distinct on their first
// `cols` columns.
bool distinct_rows(const ExprPtr& e, std::size_t d, std::size_t rows, std::size_t cols);

// Which operator drives the orbit scanned by recurrence_profile.
struct RecurrenceOp {
    enum class Kind { Tail, Diff } kind = Kind::Tail;
    std::size_t degree = 1;  // for Diff
};

// For n = 1..count: longest common prefix (capped at cap) of orbit row n
// with row 0.
std::vector<std::size_t> recurrence_profile(const ExprPtr& e, RecurrenceOp op, std::size_t count,
                                            std::size_t cap);

}  // namespace deltalab
