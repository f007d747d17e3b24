#include "deltalab/periodicity.hpp"

#include <stdexcept>

#include "deltalab/diff.hpp"
#include "deltalab/errors.hpp"

namespace deltalab {

bool verify_certificate(const BitWord& w, const PeriodCertificate& cert) {
    if (cert.period == 0 || w.size() < cert.evidence_len ||
        cert.evidence_len < cert.offset + 2 * cert.period) {
        return false;
    }
    // w(n+p) = w(n) over the evidence window, word-level.
    const BitWord win = truncate(w, cert.evidence_len);
    const BitWord a = shift(win, cert.offset);
    const BitWord b = shift(win, cert.offset + cert.period);
    return first_disagreement(a, b) == std::nullopt;
}

std::optional<PeriodCertificate> detect_period(const BitWord& w, std::size_t max_period,
                                               std::size_t max_offset) {
    for (std::size_t p = 1; p <= max_period; ++p) {
        for (std::size_t n0 = 0; n0 <= max_offset; ++n0) {
            if (w.size() < n0 + 2 * p) {
                break;  // larger offsets only get worse
            }
            PeriodCertificate cert{n0, p, w.size()};
            if (verify_certificate(w, cert)) {
                return cert;
            }
        }
    }
    return std::nullopt;
}

PeriodCertificate certificate_of_evp(const ExprPtr& e) {
    const auto* node = std::get_if<EvP>(&e->node);
    if (node == nullptr) {
        throw std::invalid_argument("certificate_of_evp: expression is not an evp(...) form");
    }
    PeriodCertificate cert;
    cert.offset = node->prefix.size();
    cert.period = node->cycle.size();
    cert.evidence_len = cert.offset + 2 * cert.period;
    if (!verify_certificate(materialize(e, cert.evidence_len), cert)) {
        throw contradiction_error("certificate_of_evp: representation failed re-verification");
    }
    return cert;
}

bool check_strong_preservation(const PeriodCertificate& cert, std::size_t d, const ExprPtr& e) {
    if (cert.evidence_len < d || cert.evidence_len - d < cert.offset + 2 * cert.period) {
        throw insufficient_prefix_error(
            "check_strong_preservation: evidence window of " + std::to_string(cert.evidence_len) +
            " bits leaves less than two periods after the d=" + std::to_string(d) + " shrink");
    }
    const BitWord diffed = block_diff(d, materialize(e, cert.evidence_len));
    PeriodCertificate shrunk{cert.offset, cert.period, cert.evidence_len - d};
    return verify_certificate(diffed, shrunk);
}

OrbitPeriodWitness orbit_witness_from_period(const ExprPtr& e, const PeriodCertificate& cert,
                                             std::size_t d, std::size_t window) {
    const std::size_t p = cert.period;
    if (p == 0) {
        throw std::invalid_argument("orbit_witness_from_period: certificate period must be >= 1");
    }
    // Smallest m1 with 2^m1 > offset that has a congruent later power of 2;
    // then smallest such m2. Powers of 2 mod p always cycle, so the search
    // is bounded by the preperiod (<= log2 p) plus the cycle (<= p).
    std::size_t m1 = 0;
    while ((std::size_t{1} << m1) <= cert.offset) {
        ++m1;
    }
    for (;; ++m1) {
        const std::size_t r1 = (std::size_t{1} << m1) % p;
        std::size_t r = r1;
        bool found = false;
        std::size_t m2 = m1;
        for (std::size_t step = 0; step < 2 * p + 4; ++step) {
            r = (r * 2) % p;
            ++m2;
            if (r == r1) {
                found = true;
                break;
            }
        }
        if (!found) {
            continue;
        }
        const std::size_t n1 = std::size_t{1} << m1;
        const std::size_t n2 = std::size_t{1} << m2;
        const BitWord base = materialize(e, cert.offset + window + d * n2);
        const BitWord row1 = diff_pow2(d, m1, base);
        const BitWord row2 = diff_pow2(d, m2, base);
        const BitWord tail1 = truncate(shift(row1, cert.offset), window);
        const BitWord tail2 = truncate(shift(row2, cert.offset), window);
        if (tail1 != tail2) {
            throw contradiction_error(
                "orbit_witness_from_period: rows " + std::to_string(n1) + " and " +
                std::to_string(n2) + " disagree on the verified window; invalid certificate?");
        }
        return OrbitPeriodWitness{d, n1, n2, n1, n2 - n1, window};
    }
}

bool FactReport::all_pass() const {
    for (const auto& f : facts) {
        if (!f.pass) {
            return false;
        }
    }
    return true;
}

std::string FactReport::to_text() const {
    std::string out;
    for (const auto& f : facts) {
        out += "FACT " + f.name + (f.pass ? " PASS " : " FAIL ") + f.detail + "\n";
    }
    return out;
}

FactReport point_orbit_facts(std::size_t p, std::size_t window) {
    if (p == 0 || (p & (p - 1)) != 0) {
        throw std::invalid_argument("point_orbit_facts: p must be a power of 2");
    }
    if (window < 2 * p) {
        throw insufficient_window_error("point_orbit_facts: window " + std::to_string(window) +
                                        " < 2p = " + std::to_string(2 * p));
    }
    const ExprPtr delta = point(p - 1);
    FactReport report;

    const BitWord back = iterate_diff_fast(1, p, materialize(delta, window + p));
    const BitWord expect_point = materialize(delta, window);
    report.facts.push_back(Fact{"orbit_returns_to_point",
                                truncate(back, window) == expect_point,
                                "p=" + std::to_string(p) + " window=" + std::to_string(window)});

    const BitWord last = iterate_diff_fast(1, p - 1, materialize(delta, window + p - 1));
    BitWord expect_ones = BitWord::ones(p);
    expect_ones.append(BitWord::zeros(window - p));
    report.facts.push_back(Fact{"row_before_return_is_all_ones",
                                truncate(last, window) == expect_ones,
                                "p=" + std::to_string(p) + " window=" + std::to_string(window)});
    return report;
}

bool distinct_rows(const ExprPtr& e, std::size_t d, std::size_t rows, std::size_t cols) {
    BitWord cur = materialize(e, cols + d * (rows > 0 ? rows - 1 : 0));
    std::vector<BitWord> seen;
    seen.reserve(rows);
    for (std::size_t n = 0; n < rows; ++n) {
        if (n > 0) {
            cur = block_diff(d, cur);
        }
        seen.push_back(truncate(cur, cols));
    }
    for (std::size_t i = 0; i < seen.size(); ++i) {
        for (std::size_t j = i + 1; j < seen.size(); ++j) {
            if (seen[i] == seen[j]) {
                return false;
            }
        }
    }
    return true;
}

std::vector<std::size_t> recurrence_profile(const ExprPtr& e, RecurrenceOp op, std::size_t count,
                                            std::size_t cap) {
    std::vector<std::size_t> out;
    out.reserve(count);
    if (op.kind == RecurrenceOp::Kind::Tail) {
        const BitWord base = materialize(e, cap + count);
        const BitWord head = truncate(base, cap);
        for (std::size_t n = 1; n <= count; ++n) {
            const auto fd = first_disagreement(head, shift(base, n));
            out.push_back(std::min(fd.value_or(cap), cap));
        }
    } else {
        const std::size_t d = op.degree;
        BitWord cur = materialize(e, cap + d * count);
        const BitWord head = truncate(cur, cap);
        for (std::size_t n = 1; n <= count; ++n) {
            cur = block_diff(d, cur);
            const auto fd = first_disagreement(head, cur);
            out.push_back(std::min(fd.value_or(cap), cap));
        }
    }
    return out;
}

}  // namespace deltalab
