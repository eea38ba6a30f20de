#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "isocycle/cycle_analysis.hpp"
#include "isocycle/tunnels.hpp"

namespace isocycle {

enum class Condition { C1 = 1, C2, C3, C4, C5, C6, C7 };

std::string to_string(Condition c);

struct PullRecord {
    FaceId puller = -1;
    FaceId source = -1;  // the e-opposite face that loses the weight
    int edge = -1;
    Condition condition = Condition::C1;
    bool mono = false;
    /// C7 only: the transfer chain back to the exit pair.
    std::vector<FaceEdge> chain;

    friend bool operator==(const PullRecord& x, const PullRecord& y) {
        return x.puller == y.puller && x.source == y.source && x.edge == y.edge &&
               x.condition == y.condition && x.mono == y.mono && x.chain == y.chain;
    }
};

struct WeightLedger {
    int c = 0;
    std::vector<int> initial;  // per face of H
    std::vector<int> final;
    std::vector<PullRecord> pulls;

    int total() const;
    friend bool operator==(const WeightLedger&, const WeightLedger&) = default;
};

/// Evaluates one clause of the discharging rule for minor face g over C-edge e.
/// C7 consults the transfer-pair oracle and evaluates C1..C6 at the exit pair.
class ConditionEvaluator {
public:
    ConditionEvaluator(const CycleAnalysis& a, const TunnelSet& t, bool strict_transfer = true)
        : a_(a), t_(t), transfer_(a, t, strict_transfer) {}

    bool evaluate(Condition cond, FaceId g, int e);
    /// The C7 witness chain of the last successful C7 evaluation.
    const std::vector<FaceEdge>& last_chain() const { return last_chain_; }
    bool is_mono(FaceId g, int e) const;

    TransferPairOracle& transfer() { return transfer_; }

private:
    bool c1(FaceId g, int e) const;
    bool c2(FaceId g, int e) const;
    bool c3(FaceId g, int e) const;
    bool c4(FaceId g, int e) const;
    bool c5(FaceId g, int e);
    bool c6(FaceId g, int e) const;
    bool c7(FaceId g, int e);

    // clause helpers
    bool is_extremal_of_three_arch_of(FaceId f, int e) const;
    bool is_middle_of_three_arch_of(FaceId f, int e) const;
    bool has_opposite_major(const Arch& b) const;
    bool vertex_is_extremal_of_two_arch(FaceId f, int vertex_index) const;

    const CycleAnalysis& a_;
    const TunnelSet& t_;
    TransferPairOracle transfer_;
    std::vector<FaceEdge> last_chain_;
};

struct DischargeOptions {
    bool strict_transfer = true;
};

/// Throws MinorOneFacePresent or CycleTooShort (c < 6).
WeightLedger apply_discharging(const CycleAnalysis& a, const TunnelSet& t, DischargeOptions opt = {});

/// `per_face`: no face pulls more than 1 over one of its C-edges.
/// `opposite`: over each C-edge at most one of its two faces pulls.
/// The second relies on non-extendability and can fail on extendable cycles.
struct ExclusivityReport {
    bool per_face = true;
    bool opposite = true;
    bool ok = true;  // both
    /// (edge, description) of every violation.
    std::vector<std::pair<int, std::string>> violations;
};

ExclusivityReport check_exclusivity(const WeightLedger& ledger);

/// Faces below {major: 0, thin minor: 2, thick minor: 4}.
std::vector<FaceId> check_weight_bounds(const WeightLedger& ledger, const CycleAnalysis& a);

struct InequalityReport {
    bool ineq1 = false;  // 2c >= 4(|M-| + |M+|)
    bool ineq2 = false;  // 2c >= 2|M-| + 4|M+|
    bool applicable1 = false;  // V- nonempty
    int m_minus = 0;
    int m_plus = 0;
    long long bound_num = 0;  // implied bound as a fraction
    long long bound_den = 3;
    bool bound_met = false;   // the cycle reaches the implied bound
};

InequalityReport check_inequalities(const WeightLedger& ledger, const CycleAnalysis& a);

/// Structural claims checked as diagnostics (never thrown).
struct InvariantReport {
    bool conservation = true;
    bool exclusivity = true;           // per face and edge
    bool opposite_exclusivity = true;  // diagnostic only, not part of all()
    bool tunnel_one_way = true;
    bool exit_coupling = true;
    bool mono_spacing = true;
    std::vector<std::string> notes;

    bool all() const { return conservation && exclusivity && tunnel_one_way && exit_coupling && mono_spacing; }
};

InvariantReport check_invariants(const CycleAnalysis& a, const TunnelSet& t, const WeightLedger& ledger,
                                 DischargeOptions opt = {});

nlohmann::json ledger_to_json(const CycleAnalysis& a, const WeightLedger& ledger);

}  // namespace isocycle
