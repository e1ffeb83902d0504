#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dtwist/gf2/bit_matrix.hpp"
#include "dtwist/gf2/chain_complex.hpp"
#include "dtwist/model/verify.hpp"

namespace dtwist::pipeline {

struct Verdict {
    std::string name;
    bool pass = false;
    bool operator==(const Verdict&) const = default;
};

/// Rank keys used by the pipeline.
namespace keys {
inline constexpr const char* twist = "HF(tau_S^-1)";
inline constexpr const char* sn = "HF(S,N)";
inline constexpr const char* qs = "HF(Q,S)";
inline constexpr const char* tensor = "H(CF(S,N) x CF(Q,S))";
inline constexpr const char* qn = "HF(Q,N)";
inline constexpr const char* qtn = "HF(Q,tau_S N)";
}  // namespace keys

struct VerificationReport {
    std::string scenario;
    std::uint64_t seed = 0;
    std::map<std::string, gf2::GradedDims> ranks;
    /// c* per degree in the component basis of H^0 and the computed bases above.
    std::map<int, gf2::BitMatrix> involution;
    std::optional<gf2::BitVector> a;
    std::vector<Verdict> verdicts;
    std::vector<model::ModelReport> model;

    bool pass() const;
    bool operator==(const VerificationReport&) const;
};

/**
 * Verdicts re-derived from the report data alone: A from `a`, c* from
 * `involution`, LES ranks from `ranks`, model verdicts from the residuals.
 * Names and order match what the pipeline stores.
 */
std::vector<Verdict> recompute_verdicts(const VerificationReport& r);

/// Report over model-geometry verifier runs, one verdict per run.
VerificationReport model_report(const std::vector<model::ModelReport>& reports, std::uint64_t seed);

enum class Format { Table, Structured };
Format parse_format(const std::string& s);

/// Structured output is JSON with a fixed key order; table output is for people.
std::string emit_report(const VerificationReport& r, Format f);
/// Inverse of the structured format. Throws ParseError.
VerificationReport parse_report(const std::string& text);

}  // namespace dtwist::pipeline
