#include "nmswitch/switchop/quantum_switch.hpp"

#include <array>
#include <cmath>
#include <string>

#include "nmswitch/channels/eternal.hpp"
#include "nmswitch/core/eigen.hpp"
#include "nmswitch/errors.hpp"

namespace nmswitch {

namespace {

const ComplexMatrix& projector0()
{
    static const ComplexMatrix p = ComplexMatrix::diagonal({1.0, 0.0});
    return p;
}

const ComplexMatrix& projector1()
{
    static const ComplexMatrix p = ComplexMatrix::diagonal({0.0, 1.0});
    return p;
}

std::array<Complex, 2> branch_ket(Branch b)
{
    const double s = 1.0 / std::sqrt(2.0);
    return b == Branch::Plus ? std::array<Complex, 2>{s, s} : std::array<Complex, 2>{s, -s};
}

// I (x) <bra| : 2x4
ComplexMatrix control_bra(std::span<const Complex> bra_conj_source)
{
    ComplexMatrix m(2, 4);
    for (std::size_t t = 0; t < 2; ++t) {
        for (std::size_t c = 0; c < 2; ++c) m(t, t * 2 + c) = std::conj(bra_conj_source[c]);
    }
    return m;
}

// I (x) |ket> : 4x2
ComplexMatrix control_ket(std::span<const Complex> ket)
{
    ComplexMatrix m(4, 2);
    for (std::size_t t = 0; t < 2; ++t) {
        for (std::size_t c = 0; c < 2; ++c) m(t * 2 + c, t) = ket[c];
    }
    return m;
}

void require_qubit_pair(const KrausChannel& n1, const KrausChannel& n2)
{
    if (n1.dim() != 2 || n2.dim() != 2) {
        throw Error(ErrorCode::DimensionMismatch, "the SWITCH acts on two qubit channels");
    }
    if (std::abs(n1.trace_scale() - 1.0) > kCompletenessTolerance ||
        std::abs(n2.trace_scale() - 1.0) > kCompletenessTolerance) {
        throw Error(ErrorCode::InvalidArgument, "SWITCH inputs must be trace preserving");
    }
}

std::vector<ComplexMatrix> weighted_kraus(const KrausChannel& n1, const KrausChannel& n2, double w0, double w1)
{
    require_qubit_pair(n1, n2);
    std::vector<ComplexMatrix> out;
    out.reserve(n1.size() * n2.size());
    for (const auto& k1 : n1.kraus()) {
        for (const auto& k2 : n2.kraus()) {
            out.push_back(w0 * kron(k2 * k1, projector0()) + w1 * kron(k1 * k2, projector1()));
        }
    }
    return out;
}

void require_nonnegative(double t)
{
    if (!(t >= 0.0)) throw Error(ErrorCode::NegativeTime, "time must be >= 0");
}

} // namespace

ControlSpec ControlSpec::plus()
{
    const double s = 1.0 / std::sqrt(2.0);
    const std::array<Complex, 2> ket{s, s};
    return ControlSpec{DensityMatrix::pure(ket)};
}

ControlSpec ControlSpec::zero()
{
    const std::array<Complex, 2> ket{1.0, 0.0};
    return ControlSpec{DensityMatrix::pure(ket)};
}

ControlSpec ControlSpec::one()
{
    const std::array<Complex, 2> ket{0.0, 1.0};
    return ControlSpec{DensityMatrix::pure(ket)};
}

char branch_symbol(Branch b) noexcept
{
    return b == Branch::Plus ? '+' : '-';
}

KrausChannel switch_kraus(const KrausChannel& n1, const KrausChannel& n2)
{
    return KrausChannel(weighted_kraus(n1, n2, 1.0, 1.0));
}

std::vector<ComplexMatrix> mixed_order_kraus(const KrausChannel& n1, const KrausChannel& n2, double p)
{
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::BadWeights, "order weight p must lie in [0, 1]");
    }
    return weighted_kraus(n1, n2, std::sqrt(2.0 * p), std::sqrt(2.0 * (1.0 - p)));
}

DensityMatrix switch_evolve(const KrausChannel& n1, const KrausChannel& n2, const DensityMatrix& rho,
                            const ControlSpec& control)
{
    if (rho.dim() != 2 || control.omega_c.dim() != 2) {
        throw Error(ErrorCode::DimensionMismatch, "SWITCH target and control are qubits");
    }
    const KrausChannel w = switch_kraus(n1, n2);
    return apply(w, tensor(rho, control.omega_c));
}

ControlMeasurement measure_control(const DensityMatrix& joint)
{
    if (joint.dim() != 4) {
        throw Error(ErrorCode::DimensionMismatch, "joint state must be target (x) control");
    }
    auto outcome = [&](Branch b) {
        const auto ket = branch_ket(b);
        ComplexMatrix reduced = control_bra(ket) * joint.matrix() * control_ket(ket);
        const double prob = reduced.trace().real();
        SwitchOutcome o{b, prob, std::nullopt, std::nullopt};
        if (prob >= kZeroBranchProbability) {
            reduced *= 1.0 / prob;
            o.state = DensityMatrix::from_matrix(std::move(reduced), kEvolutionTolerance);
        }
        return o;
    };
    return ControlMeasurement{outcome(Branch::Plus), outcome(Branch::Minus)};
}

KrausChannel switch_branch_channel(const KrausChannel& n1, const KrausChannel& n2, const ControlSpec& control,
                                   Branch branch)
{
    const KrausChannel w = switch_kraus(n1, n2);
    const auto bra = branch_ket(branch);
    const ComplexMatrix project = control_bra(bra);
    const HermitianEigen eig = eigen_hermitian(control.omega_c.matrix());

    std::vector<ComplexMatrix> kraus;
    for (std::size_t k = 0; k < 2; ++k) {
        const double weight = eig.values[k];
        if (weight <= kZeroBranchProbability) continue;
        const std::array<Complex, 2> ket{eig.vectors(0, k), eig.vectors(1, k)};
        const ComplexMatrix embed = std::sqrt(weight) * control_ket(ket);
        for (const auto& wij : w.kraus()) kraus.push_back(project * wij * embed);
    }

    ComplexMatrix gram(2, 2);
    for (const auto& e : kraus) gram += dagger(e) * e;
    const double scale = 0.5 * gram.trace().real();
    if (scale < kZeroBranchProbability) {
        throw Error(ErrorCode::ZeroProbabilityBranch,
                    std::string("branch '") + branch_symbol(branch) + "' has zero probability");
    }
    if (max_abs_diff(gram, scale * ComplexMatrix::identity(2)) > kCompletenessTolerance) {
        throw Error(ErrorCode::NonUniformBranch,
                    std::string("branch '") + branch_symbol(branch) + "' probability depends on the input state");
    }
    return KrausChannel(std::move(kraus), scale);
}

ControlMeasurement switch_measure(const KrausChannel& n1, const KrausChannel& n2, const DensityMatrix& rho,
                                  const ControlSpec& control)
{
    ControlMeasurement m = measure_control(switch_evolve(n1, n2, rho, control));
    for (SwitchOutcome* o : {&m.plus, &m.minus}) {
        try {
            o->effective = switch_branch_channel(n1, n2, control, o->branch);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::ZeroProbabilityBranch && e.code() != ErrorCode::NonUniformBranch) throw;
        }
    }
    return m;
}

ComplexMatrix trace_out_control(const ComplexMatrix& joint)
{
    if (joint.rows() != 4 || joint.cols() != 4) {
        throw Error(ErrorCode::DimensionMismatch, "trace_out_control expects a 4x4 operator");
    }
    ComplexMatrix out(2, 2);
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) out(r, c) = joint(r * 2, c * 2) + joint(r * 2 + 1, c * 2 + 1);
    }
    return out;
}

DensityMatrix mixed_order_traced(const KrausChannel& n1, const KrausChannel& n2, double p,
                                 const DensityMatrix& rho)
{
    if (rho.dim() != 2) {
        throw Error(ErrorCode::DimensionMismatch, "mixed_order_traced expects a qubit state");
    }
    const auto w = mixed_order_kraus(n1, n2, p);
    const DensityMatrix start = tensor(rho, ControlSpec::plus().omega_c);
    ComplexMatrix joint(4, 4);
    for (const auto& k : w) add_sandwich(joint, k, start.matrix());
    return DensityMatrix::from_matrix(trace_out_control(joint), kEvolutionTolerance);
}

KrausChannel mixed_order_channel(const KrausChannel& n1, const KrausChannel& n2, double p)
{
    const auto w = mixed_order_kraus(n1, n2, p);
    const double s = 1.0 / std::sqrt(2.0);
    const std::array<Complex, 2> plus{s, s};
    const ComplexMatrix embed = control_ket(plus);
    const std::array<std::array<Complex, 2>, 2> basis{{{1.0, 0.0}, {0.0, 1.0}}};
    std::vector<ComplexMatrix> kraus;
    for (const auto& b : basis) {
        const ComplexMatrix project = control_bra(b);
        for (const auto& k : w) kraus.push_back(project * k * embed);
    }
    return KrausChannel(std::move(kraus));
}

SwitchClosedForm switched_channel_closed_form(double t)
{
    require_nonnegative(t);
    // Written in v = e^{-2t} so large t does not overflow.
    const double v = std::exp(-2.0 * t);
    const double v2 = v * v;
    const double den = -v2 + 2.0 * v + 7.0;
    const double a = (3.0 * v2 + 2.0 * v + 3.0) / den;
    const double b = 4.0 * (1.0 - v2) / den;
    const double n = (7.0 + 2.0 * v - v2) / 8.0;
    return SwitchClosedForm{t, a, b, n};
}

SwitchCoefficientRates switched_coefficient_derivatives(double t)
{
    require_nonnegative(t);
    const double v = std::exp(-2.0 * t);
    const double v2 = v * v;
    const double den = -v2 + 2.0 * v + 7.0;
    const double dden = -2.0 * v + 2.0;
    const double num_a = 3.0 * v2 + 2.0 * v + 3.0;
    const double dnum_a = 6.0 * v + 2.0;
    const double num_b = 4.0 * (1.0 - v2);
    const double dnum_b = -8.0 * v;
    const double dv_dt = -2.0 * v;
    return SwitchCoefficientRates{
        dv_dt * (dnum_a * den - num_a * dden) / (den * den),
        dv_dt * (dnum_b * den - num_b * dden) / (den * den),
    };
}

BlochFactors switched_bloch_factors(const SwitchClosedForm& cf)
{
    return BlochFactors{cf.A, cf.A, cf.A - cf.B};
}

DensityMatrix apply_closed_form(const SwitchClosedForm& cf, const DensityMatrix& rho)
{
    if (rho.dim() != 2) {
        throw Error(ErrorCode::DimensionMismatch, "closed form acts on a qubit");
    }
    const Complex r11 = rho(0, 0);
    const Complex r22 = rho(1, 1);
    ComplexMatrix out{{cf.A * r11 + cf.B * r22, cf.A * rho(0, 1)},
                      {cf.A * rho(1, 0), cf.B * r11 + cf.A * r22}};
    return DensityMatrix::from_matrix(std::move(out), kEvolutionTolerance);
}

KrausChannel switched_family(double t)
{
    require_nonnegative(t);
    const KrausChannel n = eternal_channel(t);
    return switch_branch_channel(n, n, ControlSpec::plus(), Branch::Plus);
}

} // namespace nmswitch
