#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <vector>

#include "dp/common.hpp"

// Reverse-mode automatic differentiation over dense matrices.
//
// A Tape records a DAG of matrix operations as it is built; backward() walks
// the record in reverse and accumulates gradients into every node that
// (transitively) depends on a parameter. Encoders are expressed as graph
// builders on a Tape, which is what makes "the gradient of any scalar of the
// output with respect to the inserted embedding vectors" obtainable without
// a framework dependency.
//
// Column convention: a sequence of L embedding vectors is a d x L matrix,
// one column per position. Batched features are m x B, one column per item.

namespace dp::ad {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

using NodeId = int;

class Tape {
public:
    NodeId constant(Mat v) { return push(std::move(v), false, {}); }

    NodeId param(Mat v) { return push(std::move(v), true, {}); }

    const Mat& value(NodeId id) const { return nodes_[id].value; }

    const Mat& grad(NodeId id) const { return nodes_[id].grad; }

    size_t size() const { return nodes_.size(); }

    // ---- arithmetic -------------------------------------------------------

    NodeId add(NodeId a, NodeId b) {
        check_same_shape(a, b, "add");
        NodeId out = push(value(a) + value(b), needs(a) || needs(b), [this, a, b](const Mat& g) {
            accum(a, g);
            accum(b, g);
        });
        return out;
    }

    NodeId sub(NodeId a, NodeId b) {
        check_same_shape(a, b, "sub");
        return push(value(a) - value(b), needs(a) || needs(b), [this, a, b](const Mat& g) {
            accum(a, g);
            accum(b, -g);
        });
    }

    NodeId scale(NodeId a, double s) {
        return push(value(a) * s, needs(a), [this, a, s](const Mat& g) { accum(a, g * s); });
    }

    NodeId cmul(NodeId a, NodeId b) {
        check_same_shape(a, b, "cmul");
        return push(value(a).cwiseProduct(value(b)), needs(a) || needs(b),
                    [this, a, b](const Mat& g) {
                        accum(a, g.cwiseProduct(value(b)));
                        accum(b, g.cwiseProduct(value(a)));
                    });
    }

    NodeId matmul(NodeId a, NodeId b) {
        if (value(a).cols() != value(b).rows())
            fail(ErrorKind::shape, "matmul: inner dimensions differ");
        return push(value(a) * value(b), needs(a) || needs(b), [this, a, b](const Mat& g) {
            accum(a, g * value(b).transpose());
            accum(b, value(a).transpose() * g);
        });
    }

    NodeId transpose(NodeId a) {
        return push(value(a).transpose(), needs(a),
                    [this, a](const Mat& g) { accum(a, g.transpose()); });
    }

    // Broadcast-add a column vector to every column.
    NodeId add_colvec(NodeId a, NodeId v) {
        if (value(v).cols() != 1 || value(v).rows() != value(a).rows())
            fail(ErrorKind::shape, "add_colvec: bias shape mismatch");
        return push(value(a).colwise() + Vec(value(v).col(0)), needs(a) || needs(v),
                    [this, a, v](const Mat& g) {
                        accum(a, g);
                        accum(v, g.rowwise().sum());
                    });
    }

    // ---- nonlinearities ----------------------------------------------------

    // isru(x) = x / sqrt(1 + x^2): a smooth bounded activation whose forward
    // pass uses only +,*,/ and sqrt, all exactly rounded under IEEE-754.
    NodeId isru(NodeId a) {
        const Mat& x = value(a);
        Mat y = x.array() / (1.0 + x.array().square()).sqrt();
        return push(std::move(y), needs(a), [this, a](const Mat& g) {
            Eigen::ArrayXXd t = 1.0 + value(a).array().square();
            accum(a, (g.array() / (t * t.sqrt())).matrix());
        });
    }

    // sig01(x) = (1 + isru(x)) / 2, a (0,1) gate.
    NodeId sig01(NodeId a) {
        const Mat& x = value(a);
        Mat y = 0.5 + 0.5 * (x.array() / (1.0 + x.array().square()).sqrt());
        return push(std::move(y), needs(a), [this, a](const Mat& g) {
            Eigen::ArrayXXd t = 1.0 + value(a).array().square();
            accum(a, (0.5 * g.array() / (t * t.sqrt())).matrix());
        });
    }

    // quick_gelu(x) = x * sigmoid(1.702 x), the activation used by CLIP.
    NodeId quick_gelu(NodeId a) {
        const Mat& x = value(a);
        Eigen::ArrayXXd s = 1.0 / (1.0 + (-1.702 * x.array()).exp());
        return push((x.array() * s).matrix(), needs(a), [this, a](const Mat& g) {
            Eigen::ArrayXXd xs = value(a).array();
            Eigen::ArrayXXd sg = 1.0 / (1.0 + (-1.702 * xs).exp());
            accum(a, (g.array() * (sg + xs * 1.702 * sg * (1.0 - sg))).matrix());
        });
    }

    // ---- structure ---------------------------------------------------------

    NodeId slice_rows(NodeId a, int r0, int nr) {
        return push(value(a).middleRows(r0, nr), needs(a), [this, a, r0, nr](const Mat& g) {
            Mat d = Mat::Zero(value(a).rows(), value(a).cols());
            d.middleRows(r0, nr) = g;
            accum(a, d);
        });
    }

    NodeId slice_cols(NodeId a, int c0, int nc) {
        return push(value(a).middleCols(c0, nc), needs(a), [this, a, c0, nc](const Mat& g) {
            Mat d = Mat::Zero(value(a).rows(), value(a).cols());
            d.middleCols(c0, nc) = g;
            accum(a, d);
        });
    }

    NodeId vconcat(const std::vector<NodeId>& parts) {
        long rows = 0, cols = value(parts.at(0)).cols();
        bool ng = false;
        for (NodeId p : parts) {
            rows += value(p).rows();
            ng = ng || needs(p);
        }
        Mat v(rows, cols);
        long r = 0;
        for (NodeId p : parts) {
            v.middleRows(r, value(p).rows()) = value(p);
            r += value(p).rows();
        }
        return push(std::move(v), ng, [this, parts](const Mat& g) {
            long r = 0;
            for (NodeId p : parts) {
                accum(p, g.middleRows(r, value(p).rows()));
                r += value(p).rows();
            }
        });
    }

    NodeId hconcat(const std::vector<NodeId>& parts) {
        long cols = 0, rows = value(parts.at(0)).rows();
        bool ng = false;
        for (NodeId p : parts) {
            cols += value(p).cols();
            ng = ng || needs(p);
        }
        Mat v(rows, cols);
        long c = 0;
        for (NodeId p : parts) {
            v.middleCols(c, value(p).cols()) = value(p);
            c += value(p).cols();
        }
        return push(std::move(v), ng, [this, parts](const Mat& g) {
            long c = 0;
            for (NodeId p : parts) {
                accum(p, g.middleCols(c, value(p).cols()));
                c += value(p).cols();
            }
        });
    }

    // d x L matrix that carries copies of a d x 1 parameter at the given
    // columns and zeros elsewhere. Gradients of every copy accumulate back
    // into the one parameter, which is how a prefix vector inserted into n
    // prompts receives n gradient contributions.
    NodeId scatter_cols(NodeId v, const std::vector<int>& positions, int total_cols) {
        if (value(v).cols() != 1) fail(ErrorKind::shape, "scatter_cols: expected column vector");
        Mat out = Mat::Zero(value(v).rows(), total_cols);
        for (int p : positions) out.col(p) = value(v).col(0);
        return push(std::move(out), needs(v), [this, v, positions](const Mat& g) {
            Mat d = Mat::Zero(value(v).rows(), 1);
            for (int p : positions) d.col(0) += g.col(p);
            accum(v, d);
        });
    }

    // ---- reductions & normalizations ---------------------------------------

    NodeId sum_cols(NodeId a) {  // d x L -> d x 1
        return push(value(a).rowwise().sum(), needs(a), [this, a](const Mat& g) {
            accum(a, g.col(0).replicate(1, value(a).cols()));
        });
    }

    NodeId sum(NodeId a) {  // all entries -> 1 x 1
        Mat s(1, 1);
        s(0, 0) = value(a).sum();
        return push(std::move(s), needs(a), [this, a](const Mat& g) {
            accum(a, Mat::Constant(value(a).rows(), value(a).cols(), g(0, 0)));
        });
    }

    NodeId colwise_l2_normalize(NodeId a) {
        Mat y = value(a);
        for (long c = 0; c < y.cols(); ++c) {
            double n = y.col(c).norm();
            if (n == 0.0) fail(ErrorKind::numeric, "colwise_l2_normalize: zero-norm column");
            y.col(c) /= n;
        }
        return push(std::move(y), needs(a), [this, a](const Mat& g) {
            const Mat& x = value(a);
            Mat d(x.rows(), x.cols());
            for (long c = 0; c < x.cols(); ++c) {
                double n = x.col(c).norm();
                Vec y = x.col(c) / n;
                d.col(c) = (g.col(c) - y * y.dot(g.col(c))) / n;
            }
            accum(a, d);
        });
    }

    NodeId softmax_cols(NodeId a) {
        const Mat& x = value(a);
        Mat y(x.rows(), x.cols());
        for (long c = 0; c < x.cols(); ++c) {
            Eigen::ArrayXd e = (x.col(c).array() - x.col(c).maxCoeff()).exp();
            y.col(c) = e / e.sum();
        }
        return push(std::move(y), needs(a), [this, a, out = next_id()](const Mat& g) {
            const Mat& p = value(out);
            Mat d(p.rows(), p.cols());
            for (long c = 0; c < p.cols(); ++c) {
                double dot = p.col(c).dot(g.col(c));
                d.col(c) = p.col(c).cwiseProduct(g.col(c).array().matrix() -
                                                 Vec::Constant(p.rows(), dot));
            }
            accum(a, d);
        });
    }

    // log(max(x, floor)); gradient is zero on clamped entries.
    NodeId clamped_log(NodeId a, double floor) {
        const Mat& x = value(a);
        Mat y = x.array().max(floor).log();
        return push(std::move(y), needs(a), [this, a, floor](const Mat& g) {
            const Mat& x = value(a);
            accum(a, (g.array() * (x.array() > floor).cast<double>() /
                      x.array().max(floor)).matrix());
        });
    }

    // Per-column layer normalization with fixed affine weights (the weights
    // belong to a frozen model; no gradient flows into them).
    NodeId layernorm_cols(NodeId a, const Vec& gamma, const Vec& beta, double eps = 1e-5) {
        const Mat& x = value(a);
        long n = x.rows();
        if (gamma.size() != n || beta.size() != n)
            fail(ErrorKind::shape, "layernorm_cols: affine shape mismatch");
        Mat y(n, x.cols());
        for (long c = 0; c < x.cols(); ++c) {
            double mu = x.col(c).mean();
            double var = (x.col(c).array() - mu).square().sum() / static_cast<double>(n);
            Eigen::ArrayXd xhat = (x.col(c).array() - mu) / std::sqrt(var + eps);
            y.col(c) = (gamma.array() * xhat + beta.array()).matrix();
        }
        return push(std::move(y), needs(a), [this, a, gamma, eps](const Mat& g) {
            const Mat& x = value(a);
            long n = x.rows();
            Mat d(n, x.cols());
            for (long c = 0; c < x.cols(); ++c) {
                double mu = x.col(c).mean();
                double var = (x.col(c).array() - mu).square().sum() / static_cast<double>(n);
                double inv = 1.0 / std::sqrt(var + eps);
                Eigen::ArrayXd xhat = (x.col(c).array() - mu) * inv;
                Eigen::ArrayXd gh = g.col(c).array() * gamma.array();
                double m1 = gh.mean();
                double m2 = (gh * xhat).mean();
                d.col(c) = ((gh - m1 - xhat * m2) * inv).matrix();
            }
            accum(a, d);
        });
    }

    // ---- backward ----------------------------------------------------------

    void backward(NodeId root) {
        if (value(root).rows() != 1 || value(root).cols() != 1)
            fail(ErrorKind::shape, "backward: root must be a scalar node");
        for (auto& n : nodes_)
            if (n.needs_grad) n.grad.setZero(n.value.rows(), n.value.cols());
        if (!nodes_[root].needs_grad) return;  // no parameter in the graph
        nodes_[root].grad(0, 0) = 1.0;
        for (NodeId id = root; id >= 0; --id) {
            Node& n = nodes_[id];
            if (n.needs_grad && n.backward) n.backward(n.grad);
        }
    }

private:
    struct Node {
        Mat value;
        Mat grad;
        bool needs_grad = false;
        std::function<void(const Mat&)> backward;
    };

    NodeId next_id() const { return static_cast<NodeId>(nodes_.size()); }

    NodeId push(Mat v, bool needs_grad, std::function<void(const Mat&)> back) {
        Node n;
        n.value = std::move(v);
        n.needs_grad = needs_grad;
        if (needs_grad) n.backward = std::move(back);
        nodes_.push_back(std::move(n));
        return static_cast<NodeId>(nodes_.size()) - 1;
    }

    bool needs(NodeId id) const { return nodes_[id].needs_grad; }

    void accum(NodeId id, const Mat& g) {
        Node& n = nodes_[id];
        if (!n.needs_grad) return;
        n.grad += g;
    }

    void check_same_shape(NodeId a, NodeId b, const char* op) const {
        if (value(a).rows() != value(b).rows() || value(a).cols() != value(b).cols())
            fail(ErrorKind::shape, std::string(op) + ": operand shapes differ");
    }

    std::vector<Node> nodes_;
};

}  // namespace dp::ad
