#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "smtl/tensor.hpp"

namespace smtl {

/// Forward-pass mode. Eval keeps batch-norm on running statistics and is
/// the mode every frozen backbone runs in.
enum class Mode { Train, Eval };

/// One node of the reverse-mode tape. Parameters are long-lived leaf nodes;
/// interior nodes are created per forward pass and released with the graph.
struct Node {
    Tensor value;
    Tensor grad;  // lazily allocated, same shape as value
    bool requires_grad = false;
    std::vector<std::shared_ptr<Node>> parents;
    std::function<void(Node&)> backward_fn;  // accumulates this->grad into parents

    Tensor& ensure_grad();
    void accumulate(const Tensor& g);
};

using Var = std::shared_ptr<Node>;

/// Leaf with gradient tracking (a trainable parameter).
Var make_param(Tensor value);

/// Leaf without gradient tracking (an input batch, a frozen constant).
Var make_const(Tensor value);

/// Interior-node constructor used by ops.
Var make_op(Tensor value, std::vector<Var> parents, std::function<void(Node&)> backward_fn);

/// Reverse-mode sweep from a scalar (or any) root. Seeds root->grad with
/// ones and runs backward functions in reverse topological order.
void backward(const Var& root);

}  // namespace smtl
