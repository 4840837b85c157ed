#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qcox/algebra.hpp"
#include "qcox/quiver.hpp"

namespace qcox {

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view to_string(CheckStatus status) noexcept;

struct Check {
    std::string identity;
    CheckStatus status = CheckStatus::Skipped;
    std::string reason;
};

struct CheckReport {
    std::vector<Check> checks;

    bool all_passed() const;
    std::size_t count(CheckStatus status) const;
    /// nullptr when no check carries that identity name.
    const Check* find(std::string_view identity) const;
};

struct VerifyOptions {
    std::size_t degree_cap = kDefaultDegreeCap;
    std::uint64_t seed = 0;
    /// Random integer vector pairs added to the form identities.
    std::size_t random_instances = 0;
};

// Identity names, stable across releases.
namespace identity {
inline constexpr const char* kGraphInvolution = "s_i^2 = E";
inline constexpr const char* kGraphCommute = "s_i s_j = s_j s_i for non-neighbours";
inline constexpr const char* kGraphBraid = "s_i s_j s_i - s_j s_i s_j = (m_q - 1)(s_i - s_j) for neighbours";
inline constexpr const char* kGraphFormInvariance = "S_k^T G S_k = G";
inline constexpr const char* kNumberingIndependence = "Phi_q independent of admissible numbering";
inline constexpr const char* kCoxeterCartanGraph = "C_q^T = -Phi_q C_q";
inline constexpr const char* kSigmaCartan = "(sigma_i C)_q = S_i C_q S_i^T for sinks i";
inline constexpr const char* kSigmaCoxeter = "(sigma_i Phi)_q = S_i Phi_q S_i for sinks i";
inline constexpr const char* kUnimodular = "det C_q in {1, -1}";
inline constexpr const char* kUnitriangular = "C_q lower unitriangular in admissible order";
inline constexpr const char* kSymmetricForm = "A_q = C_q^-1 + C_q^-T symmetric";
inline constexpr const char* kGammaInvolution = "gamma_i^2 = E when a_ii(q) = 2";
inline constexpr const char* kGammaCommute = "gamma_i gamma_j = gamma_j gamma_i when a_ij(q) = 0";
inline constexpr const char* kGammaNonNeighbours = "gamma_i gamma_j vs gamma_j gamma_i for non-neighbours (informational)";
inline constexpr const char* kGammaCoxeter = "gamma_{a_1}...gamma_{a_n} = -C_q^T C_q^-1";
inline constexpr const char* kGammaBridge = "gamma_i = s_i without relations";
inline constexpr const char* kProjectiveInjective = "dim_q P(i) = -Phi_q dim_q I(i)";
inline constexpr const char* kEulerSkew = "<x,y>_q = -<Phi_q y, x>_q";
inline constexpr const char* kEulerInvariance = "<x,y>_q = <Phi_q x, Phi_q y>_q";
}  // namespace identity

/// Runs every identity that applies to `bq`; each one is an exact
/// polynomial-matrix comparison. Never throws for well-formed input:
/// inapplicable identities are reported as skipped with the reason.
CheckReport verify_identities(const BoundQuiver& bq, const VerifyOptions& options = {});

nlohmann::json to_json(const CheckReport& report);

}  // namespace qcox
