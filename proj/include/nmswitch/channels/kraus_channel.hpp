// kraus_channel.hpp: Kraus-form channels and their series / parallel / convex composition

#pragma once

#include <span>
#include <vector>

#include "nmswitch/core/matrix.hpp"
#include "nmswitch/core/qubit.hpp"

namespace nmswitch {

/// Ordered Kraus list on a 2- or 4-dimensional space with
/// sum_i K_i^dagger K_i = trace_scale * I. trace_scale < 1 marks a
/// post-selected branch; its action is renormalized by trace_scale.
class KrausChannel {
public:
    /// Throws UnsupportedDimension / DimensionMismatch / IncompleteKraus.
    explicit KrausChannel(std::vector<ComplexMatrix> kraus, double trace_scale = 1.0);

    static KrausChannel identity(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return kraus_.size(); }
    const std::vector<ComplexMatrix>& kraus() const noexcept { return kraus_; }
    double trace_scale() const noexcept { return trace_scale_; }

private:
    std::size_t dim_;
    std::vector<ComplexMatrix> kraus_;
    double trace_scale_;
};

/// Tolerance on sum K^dagger K = trace_scale * I.
inline constexpr double kCompletenessTolerance = 1e-10;

/// max |sum K^dagger K - trace_scale * I|
double completeness_defect(const KrausChannel& ch);

/// sum_i K_i X K_i^dagger without renormalization.
ComplexMatrix apply_raw(const KrausChannel& ch, const ComplexMatrix& x);
/// sum_i K_i X K_i^dagger / trace_scale; linear, valid for any operator X.
ComplexMatrix apply_linear(const KrausChannel& ch, const ComplexMatrix& x);

struct ChannelOutput {
    DensityMatrix state; // renormalized
    double trace;        // trace before renormalization
};

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho);
ChannelOutput apply_traced(const KrausChannel& ch, const DensityMatrix& rho);

/// `second` after `first`: Kraus list {B_j A_i}.
KrausChannel compose_series(const KrausChannel& first, const KrausChannel& second);

/// Two qubit channels acting side by side: {A_i (x) B_j}.
KrausChannel compose_parallel(const KrausChannel& a, const KrausChannel& b);

struct WeightedChannel {
    double weight;
    KrausChannel channel;
};

/// Convex mixture: {sqrt(w_i) K} concatenated. Throws BadWeights.
KrausChannel mix(std::span<const WeightedChannel> members);

/// Normalized superoperator S with vec(Phi(X)) = S vec(X), row-major vec.
ComplexMatrix superoperator(const KrausChannel& ch);
/// Applies a superoperator built by superoperator() to a d x d operator.
ComplexMatrix apply_superoperator(const ComplexMatrix& super, const ComplexMatrix& x);

/// Contraction factors of a Pauli channel along the Bloch axes.
struct BlochFactors {
    double x{1.0};
    double y{1.0};
    double z{1.0};
};

/// Pauli channel with the given contraction factors; throws
/// InvalidArgument when the factors do not describe a CP map.
KrausChannel pauli_channel(const BlochFactors& factors);

} // namespace nmswitch
