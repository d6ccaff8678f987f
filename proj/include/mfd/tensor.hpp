#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "mfd/rng.hpp"

namespace mfd {

struct Shape {
    int n = 0, c = 0, h = 0, w = 0;

    std::int64_t numel() const {
        return static_cast<std::int64_t>(n) * c * h * w;
    }
    bool operator==(const Shape&) const = default;
    std::string str() const;
};

class Tensor;
using TensorPtr = std::shared_ptr<Tensor>;

/// Dense 4-D (N,C,H,W) double tensor. Each tensor produced by an op carries
/// its op node: the op name, the input tensors and a backward closure that
/// accumulates into the inputs' gradient buffers. Leaves have no closure.
class Tensor : public std::enable_shared_from_this<Tensor> {
public:
    Shape shape;
    std::vector<double> data;
    std::vector<double> grad;  // allocated lazily, same length as data
    bool requires_grad = false;

    // op node (empty for leaves)
    const char* op = "";
    std::vector<TensorPtr> parents;
    std::function<void()> backward_fn;

    Tensor(Shape s, bool rg);
    Tensor(Shape s, std::vector<double> values, bool rg);

    static TensorPtr zeros(int n, int c, int h, int w, bool requires_grad = false);
    static TensorPtr full(int n, int c, int h, int w, double value, bool requires_grad = false);
    static TensorPtr from_values(int n, int c, int h, int w, std::vector<double> values,
                                 bool requires_grad = false);
    /// Uniform values in [-bound, bound].
    static TensorPtr uniform(int n, int c, int h, int w, double bound, Rng& rng,
                             bool requires_grad = false);

    std::int64_t numel() const { return shape.numel(); }

    double& at(int i, int j, int y, int x);
    double at(int i, int j, int y, int x) const;

    double item() const;

    void ensure_grad();
    void zero_grad();
    void add_grad(std::int64_t flat, double g);

    /// Reverse-mode backprop from this scalar tensor (seeds d(this)=1).
    void backward();
};

// elementwise / structural ops -----------------------------------------------

TensorPtr add(const TensorPtr& a, const TensorPtr& b);
TensorPtr scale(const TensorPtr& a, double s);
TensorPtr relu(const TensorPtr& a);
/// Per-channel affine y = x * scale_c + shift_c; scale/shift are (1,C,1,1).
TensorPtr channel_affine(const TensorPtr& x, const TensorPtr& scale_p, const TensorPtr& shift_p);
/// Same data in a new shape (row-major order preserved).
TensorPtr reshape(const TensorPtr& a, int n, int c, int h, int w);
/// Concatenates along the channel dimension.
TensorPtr concat_channels(const TensorPtr& a, const TensorPtr& b);
/// Concatenates along the leading dimension; trailing dims must agree.
TensorPtr concat_rows(const std::vector<TensorPtr>& parts);
/// out[r] = in[rows[r]] over the leading dimension.
TensorPtr gather_rows(const TensorPtr& a, const std::vector<int>& rows);
/// out[k] = in.data[flat_index[k]], as a (K,1,1,1) tensor.
TensorPtr gather_elems(const TensorPtr& a, const std::vector<std::int64_t>& flat);

// dense layers ----------------------------------------------------------------

/// weight is (outC, inC, kH, kW); bias is (1, outC, 1, 1).
TensorPtr conv2d(const TensorPtr& input, const TensorPtr& weight, const TensorPtr& bias,
                 int stride, int pad);
/// Input flattened to (N, C*H*W); weight is (D, M, 1, 1); bias (1, M, 1, 1);
/// output (N, M, 1, 1).
TensorPtr linear(const TensorPtr& input, const TensorPtr& weight, const TensorPtr& bias);

// pooling / resampling ---------------------------------------------------------

TensorPtr max_pool(const TensorPtr& input, int k, int stride);
/// Pools each output cell over its proportional input window.
TensorPtr adaptive_max_pool(const TensorPtr& input, int out_h, int out_w);
/// Align-corners-false bilinear resize with edge clamping.
TensorPtr resize_bilinear(const TensorPtr& input, int out_h, int out_w);

// attention --------------------------------------------------------------------

/// Embedded dot-product attention over all spatial positions:
/// out[c,i] = sum_j softmax_j(theta[:,i] . phi[:,j]) * g[c,j].
/// theta, phi, g share shape (N,C,H,W).
TensorPtr spatial_attention(const TensorPtr& theta, const TensorPtr& phi, const TensorPtr& g);

// losses ------------------------------------------------------------------------

/// Mean over rows of -log softmax(logits)[label]; logits (N,M,1,1).
TensorPtr softmax_cross_entropy(const TensorPtr& logits, const std::vector<int>& labels);
/// Numerically stable binary CE with logits, mean over elements.
TensorPtr bce_with_logits(const TensorPtr& logits, const std::vector<double>& targets);
/// sum(huber(pred - target, beta)) / denom.
TensorPtr smooth_l1(const TensorPtr& pred, const std::vector<double>& targets, double beta,
                    double denom);

// plain helpers -----------------------------------------------------------------

/// In-place softmax of a row (no graph). Rows sum to 1.
void softmax_row(double* v, int m);

/// Bilinear lookup at index coordinates (y, x): hard zero once more than one
/// pixel outside the grid, edge-clamped otherwise. d_dy/d_dx, when non-null,
/// receive the derivative w.r.t. the coordinates (zero in clamped regions).
double bilinear_sample(const double* plane, int h, int w, double y, double x,
                       double* d_dy = nullptr, double* d_dx = nullptr);

/// Adjoint of bilinear_sample w.r.t. the plane: adds g at the sample's taps.
void scatter_bilinear(double* plane, int h, int w, double y, double x, double g);

// gradient checking ---------------------------------------------------------------

struct GradCheckReport {
    double max_rel_err = 0.0;
    bool finite = true;
    std::string worst;  // "input k, flat index i" for the worst coordinate
};

using ScalarClosure = std::function<TensorPtr(const std::vector<TensorPtr>&)>;

/// Central-difference check of the closure's analytic input gradients.
/// Relative error uses denominator max(|analytic|, |numeric|, 1e-8).
GradCheckReport grad_check(const ScalarClosure& f, const std::vector<TensorPtr>& inputs,
                           double eps);

/// Same, probing only the listed flat coordinates of each input (empty list =
/// every coordinate). Used where a full sweep would be too slow.
GradCheckReport grad_check_elems(const ScalarClosure& f, const std::vector<TensorPtr>& inputs,
                                 double eps,
                                 const std::vector<std::vector<std::int64_t>>& coords);

}  // namespace mfd
