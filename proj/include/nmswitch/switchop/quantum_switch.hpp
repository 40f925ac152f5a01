// quantum_switch.hpp: the quantum SWITCH supermap on two qubit channels
//
// Joint space ordering is target (x) control. Control |0> applies n1 then n2,
// control |1> applies n2 then n1.

#pragma once

#include <optional>

#include "nmswitch/channels/kraus_channel.hpp"
#include "nmswitch/core/qubit.hpp"

namespace nmswitch {

struct ControlSpec {
    DensityMatrix omega_c; // 2x2 control state; measured in {|+>, |->}

    static ControlSpec plus();
    static ControlSpec zero();
    static ControlSpec one();
};

enum class Branch { Plus, Minus };

char branch_symbol(Branch b) noexcept;

struct SwitchOutcome {
    Branch branch;
    double probability;
    std::optional<DensityMatrix> state;       // unset when probability < kZeroBranchProbability
    std::optional<KrausChannel> effective;    // target-only channel, trace_scale = probability
};

struct ControlMeasurement {
    SwitchOutcome plus;
    SwitchOutcome minus;
};

inline constexpr double kZeroBranchProbability = 1e-14;

/// W_ij = K2_j K1_i (x) |0><0| + K1_i K2_j (x) |1><1|, all (i, j).
KrausChannel switch_kraus(const KrausChannel& n1, const KrausChannel& n2);

/// Order-weighted Kraus list
///   sqrt(2p) K2_j K1_i (x) |0><0| + sqrt(2(1-p)) K1_i K2_j (x) |1><1|.
/// p = 1/2 reproduces switch_kraus. For p != 1/2 the joint list is not
/// trace preserving, so it is returned as raw operators.
std::vector<ComplexMatrix> mixed_order_kraus(const KrausChannel& n1, const KrausChannel& n2, double p);

/// sum_ij W_ij (rho (x) omega_c) W_ij^dagger, a 4x4 density matrix.
DensityMatrix switch_evolve(const KrausChannel& n1, const KrausChannel& n2, const DensityMatrix& rho,
                            const ControlSpec& control);

/// Projects the control of a joint state onto |+> and |->. The effective
/// channel is left unset (it cannot be recovered from a single state).
ControlMeasurement measure_control(const DensityMatrix& joint);

/// Full SWITCH run: evolve, measure, and attach each branch's effective channel
/// when that branch has a state-independent success probability.
ControlMeasurement switch_measure(const KrausChannel& n1, const KrausChannel& n2, const DensityMatrix& rho,
                                  const ControlSpec& control);

/// Effective target channel of one measurement branch: Kraus operators
/// (I (x) <b|) W_ij (I (x) |c_k>) sqrt(w_k) over the eigen-decomposition of
/// omega_c. Throws ZeroProbabilityBranch, or NonUniformBranch when the branch
/// probability depends on the input state.
KrausChannel switch_branch_channel(const KrausChannel& n1, const KrausChannel& n2, const ControlSpec& control,
                                   Branch branch);

/// Partial trace over the control qubit of a target (x) control operator.
ComplexMatrix trace_out_control(const ComplexMatrix& joint);

/// Mixed causal order: apply mixed_order_kraus(n1, n2, p) to rho (x) |+><+|
/// and trace out the control. Equals p n2.n1(rho) + (1-p) n1.n2(rho).
DensityMatrix mixed_order_traced(const KrausChannel& n1, const KrausChannel& n2, double p,
                                 const DensityMatrix& rho);

/// The same mixed-order map as a target channel (control traced out).
KrausChannel mixed_order_channel(const KrausChannel& n1, const KrausChannel& n2, double p);

// ---------------------------------------------------------------------------
// Closed form for two copies of the eternal channel with omega_c = |+><+|,
// '+' outcome:
//   rho -> [[A r11 + B r22, A r12], [A r21, B r11 + A r22]]
//   A = (3 + 2e^{2t} + 3e^{4t}) / (-1 + 2e^{2t} + 7e^{4t})
//   B = 4(e^{4t} - 1) / (-1 + 2e^{2t} + 7e^{4t})
//   n = (7 + 2e^{-2t} - e^{-4t}) / 8

struct SwitchClosedForm {
    double t;
    double A;
    double B;
    double n;
};

/// Throws NegativeTime.
SwitchClosedForm switched_channel_closed_form(double t);

/// Exact time derivatives (dA/dt, dB/dt).
struct SwitchCoefficientRates {
    double dA;
    double dB;
};
SwitchCoefficientRates switched_coefficient_derivatives(double t);

/// Bloch contraction factors (A, A, A - B) of the closed form.
BlochFactors switched_bloch_factors(const SwitchClosedForm& cf);

/// Closed-form action on a qubit state.
DensityMatrix apply_closed_form(const SwitchClosedForm& cf, const DensityMatrix& rho);

/// '+' branch channel of the SWITCH on two copies of eternal_channel(t),
/// assembled from the W_ij and the control projection; trace_scale = n(t).
KrausChannel switched_family(double t);

} // namespace nmswitch
