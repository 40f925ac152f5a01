#include "nmswitch/channels/kraus_channel.hpp"

#include <array>
#include <cmath>
#include <string>

#include "nmswitch/errors.hpp"

namespace nmswitch {

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus, double trace_scale)
    : dim_(0), kraus_(std::move(kraus)), trace_scale_(trace_scale)
{
    if (kraus_.empty()) {
        throw Error(ErrorCode::InvalidArgument, "Kraus list is empty");
    }
    dim_ = kraus_.front().rows();
    if (dim_ != 2 && dim_ != 4) {
        throw Error(ErrorCode::UnsupportedDimension, "channels act on 2 or 4 dimensions");
    }
    for (const auto& k : kraus_) {
        if (k.rows() != dim_ || k.cols() != dim_) {
            throw Error(ErrorCode::DimensionMismatch, "Kraus operators must share one square shape");
        }
    }
    if (!(trace_scale_ > 0.0) || trace_scale_ > 1.0 + kCompletenessTolerance) {
        throw Error(ErrorCode::InvalidArgument, "trace_scale must lie in (0, 1]");
    }
    const double defect = completeness_defect(*this);
    if (defect > kCompletenessTolerance) {
        throw Error(ErrorCode::IncompleteKraus,
                    "sum K^dagger K deviates from trace_scale * I by " + std::to_string(defect));
    }
}

KrausChannel KrausChannel::identity(std::size_t dim)
{
    return KrausChannel({ComplexMatrix::identity(dim)});
}

double completeness_defect(const KrausChannel& ch)
{
    const std::size_t d = ch.dim();
    ComplexMatrix sum(d, d);
    for (const auto& k : ch.kraus()) sum += dagger(k) * k;
    sum -= ch.trace_scale() * ComplexMatrix::identity(d);
    return max_abs(sum);
}

ComplexMatrix apply_raw(const KrausChannel& ch, const ComplexMatrix& x)
{
    if (x.rows() != ch.dim() || x.cols() != ch.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "operator dimension does not match channel");
    }
    ComplexMatrix out(ch.dim(), ch.dim());
    for (const auto& k : ch.kraus()) add_sandwich(out, k, x);
    return out;
}

ComplexMatrix apply_linear(const KrausChannel& ch, const ComplexMatrix& x)
{
    ComplexMatrix out = apply_raw(ch, x);
    if (ch.trace_scale() != 1.0) out *= 1.0 / ch.trace_scale();
    return out;
}

ChannelOutput apply_traced(const KrausChannel& ch, const DensityMatrix& rho)
{
    ComplexMatrix raw = apply_raw(ch, rho.matrix());
    const double tr = raw.trace().real();
    if (ch.trace_scale() != 1.0) raw *= 1.0 / ch.trace_scale();
    return ChannelOutput{DensityMatrix::from_matrix(std::move(raw), kEvolutionTolerance), tr};
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho)
{
    return apply_traced(ch, rho).state;
}

KrausChannel compose_series(const KrausChannel& first, const KrausChannel& second)
{
    if (first.dim() != second.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "compose_series: channel dimensions differ");
    }
    std::vector<ComplexMatrix> out;
    out.reserve(first.size() * second.size());
    for (const auto& a : first.kraus()) {
        for (const auto& b : second.kraus()) out.push_back(b * a);
    }
    return KrausChannel(std::move(out), first.trace_scale() * second.trace_scale());
}

KrausChannel compose_parallel(const KrausChannel& a, const KrausChannel& b)
{
    if (a.dim() != 2 || b.dim() != 2) {
        throw Error(ErrorCode::UnsupportedDimension, "parallel composition is limited to two qubits");
    }
    std::vector<ComplexMatrix> out;
    out.reserve(a.size() * b.size());
    for (const auto& ka : a.kraus()) {
        for (const auto& kb : b.kraus()) out.push_back(kron(ka, kb));
    }
    return KrausChannel(std::move(out), a.trace_scale() * b.trace_scale());
}

KrausChannel mix(std::span<const WeightedChannel> members)
{
    if (members.empty()) {
        throw Error(ErrorCode::BadWeights, "mixture needs at least one member");
    }
    double total = 0.0;
    for (const auto& m : members) {
        if (!(m.weight >= 0.0)) throw Error(ErrorCode::BadWeights, "negative mixture weight");
        if (m.channel.dim() != members.front().channel.dim()) {
            throw Error(ErrorCode::DimensionMismatch, "mixture members differ in dimension");
        }
        if (std::abs(m.channel.trace_scale() - 1.0) > kCompletenessTolerance) {
            throw Error(ErrorCode::InvalidArgument, "mixture members must be trace preserving");
        }
        total += m.weight;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw Error(ErrorCode::BadWeights, "mixture weights sum to " + std::to_string(total));
    }
    std::vector<ComplexMatrix> out;
    for (const auto& m : members) {
        if (m.weight == 0.0) continue;
        const double s = std::sqrt(m.weight);
        for (const auto& k : m.channel.kraus()) out.push_back(s * k);
    }
    return KrausChannel(std::move(out));
}

ComplexMatrix superoperator(const KrausChannel& ch)
{
    // Row-major vec: vec(K X K^dagger) = (K (x) conj(K)) vec(X).
    const std::size_t d = ch.dim();
    ComplexMatrix s(d * d, d * d);
    for (const auto& k : ch.kraus()) {
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                for (std::size_t a = 0; a < d; ++a) {
                    const Complex kia = k(i, a);
                    if (kia == Complex{0.0, 0.0}) continue;
                    for (std::size_t b = 0; b < d; ++b) {
                        s(i * d + j, a * d + b) += kia * std::conj(k(j, b));
                    }
                }
            }
        }
    }
    if (ch.trace_scale() != 1.0) s *= 1.0 / ch.trace_scale();
    return s;
}

ComplexMatrix apply_superoperator(const ComplexMatrix& super, const ComplexMatrix& x)
{
    const std::size_t d = x.rows();
    if (!x.is_square() || super.rows() != d * d || super.cols() != d * d) {
        throw Error(ErrorCode::DimensionMismatch, "superoperator does not match operator size");
    }
    const auto in = x.entries();
    std::vector<Complex> out(d * d, Complex{0.0, 0.0});
    for (std::size_t r = 0; r < d * d; ++r) {
        Complex acc{0.0, 0.0};
        for (std::size_t c = 0; c < d * d; ++c) acc += super(r, c) * in[c];
        out[r] = acc;
    }
    return ComplexMatrix(d, d, std::move(out));
}

KrausChannel pauli_channel(const BlochFactors& f)
{
    // Pauli-error probabilities from the contraction factors.
    const std::array<double, 4> p = {
        0.25 * (1.0 + f.x + f.y + f.z),
        0.25 * (1.0 + f.x - f.y - f.z),
        0.25 * (1.0 - f.x + f.y - f.z),
        0.25 * (1.0 - f.x - f.y + f.z),
    };
    std::vector<ComplexMatrix> kraus;
    for (std::size_t i = 0; i < 4; ++i) {
        if (p[i] < -1e-12) {
            throw Error(ErrorCode::InvalidArgument, "Bloch factors do not define a CP Pauli channel");
        }
        if (p[i] <= 0.0) continue;
        kraus.push_back(std::sqrt(p[i]) * pauli_matrices()[i]);
    }
    return KrausChannel(std::move(kraus));
}

} // namespace nmswitch
