#pragma once

#include <riskforge/metrics.hpp>

#include <json.hpp>

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace riskforge {

enum class RiskBand { Low, Moderate, High };

std::string_view to_string(RiskBand band);

/// Terms attached to a risk band.
struct BandTerms {
    Decision decision = Decision::Approve;
    double rate_premium = 0.0;  // annual percentage points over the base rate
    int max_term_months = 360;
    bool collateral_required = false;
    bool cosigner_required = false;
};

struct RiskConfig {
    double low_threshold = 0.08;
    double high_threshold = 0.20;
    double base_rate = 8.0;  // annual percent
    std::array<BandTerms, 3> bands{{
        {Decision::Approve, 0.0, 360, false, false},
        {Decision::Review, 4.0, 240, false, true},
        {Decision::Reject, 9.0, 120, true, true},
    }};
    /// Requested amounts above this need collateral in every band.
    double collateral_amount_cap = 500000.0;

    const BandTerms& terms(RiskBand band) const { return bands[static_cast<std::size_t>(band)]; }

    /// Throws InputError unless 0 < low < high < 1, premiums are non-negative
    /// and terms are positive.
    void validate() const;
};

RiskConfig risk_config_from_json(const nlohmann::json& node);
nlohmann::json to_json(const RiskConfig& config);

struct ApplicantAssessment {
    std::string applicant_id;
    double probability_of_default = 0.0;
    RiskBand band = RiskBand::Low;
    Decision decision = Decision::Approve;
    double annual_rate = 0.0;  // percent
    double loan_amount = 0.0;
    int term_months = 0;       // as requested
    int effective_term_months = 0;  // after the band's term cap
    std::vector<std::string> conditions;
    std::optional<double> monthly_payment;  // approved applications only
};

/// Low iff p < low; Moderate iff low <= p < high; High iff p >= high.
RiskBand band_for(double probability, const RiskConfig& config);

/// Level payment of an amortizing loan: P r (1+r)^n / ((1+r)^n - 1) with
/// r = annual_rate_percent / 1200, or P / n when r = 0.
double amortized_payment(double principal, double annual_rate_percent, int months);

/// Throws InputError on a probability outside [0,1], a non-positive amount or a term below 1.
ApplicantAssessment assess(double probability, double loan_amount, int term_months, const RiskConfig& config,
                           std::string applicant_id = {});

struct PortfolioImpact {
    BusinessMetrics metrics;
    std::size_t applicants = 0;
    std::size_t approved = 0;
    double approved_principal = 0.0;
    double expected_loss = 0.0;  // sum of p * amount over approved loans
};

PortfolioImpact portfolio_impact(std::span<const ApplicantAssessment> assessments, std::span<const int> labels,
                                 double threshold);

nlohmann::json to_json(const ApplicantAssessment& assessment);

} // namespace riskforge
