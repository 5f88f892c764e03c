#pragma once

// Single-hidden-layer perceptron with ReLU and an Adam optimizer, templated
// on the scalar so tests can instantiate it with double for finite-difference
// gradient checks while the runtime uses float.
//
// Layout: y = W2 * relu(W1 * x + b1) + b2, weights row-major.

#include <cmath>
#include <cstddef>
#include <vector>

#include "honeysim/rng.hpp"

namespace honeysim {

template <typename T>
struct Mlp {
    int in = 0, hidden = 0, out = 0;
    std::vector<T> w1, b1, w2, b2;

    Mlp() = default;
    Mlp(int in_, int hidden_, int out_, Rng& rng) : in(in_), hidden(hidden_), out(out_) {
        w1.resize(std::size_t(hidden) * std::size_t(in));
        b1.assign(std::size_t(hidden), T(0));
        w2.resize(std::size_t(out) * std::size_t(hidden));
        b2.assign(std::size_t(out), T(0));
        const T s1 = T(std::sqrt(6.0 / in));
        const T s2 = T(std::sqrt(6.0 / hidden));
        for (auto& w : w1) w = T((rng.unit() * 2.0 - 1.0)) * s1;
        for (auto& w : w2) w = T((rng.unit() * 2.0 - 1.0)) * s2;
    }

    // h must hold `hidden` scalars, y `out` scalars.
    void forward(const T* x, T* h, T* y) const {
        for (int j = 0; j < hidden; ++j) {
            const T* row = w1.data() + std::size_t(j) * std::size_t(in);
            T acc = b1[std::size_t(j)];
            for (int i = 0; i < in; ++i) acc += row[i] * x[i];
            h[j] = acc > T(0) ? acc : T(0);
        }
        for (int k = 0; k < out; ++k) {
            const T* row = w2.data() + std::size_t(k) * std::size_t(hidden);
            T acc = b2[std::size_t(k)];
            for (int j = 0; j < hidden; ++j) acc += row[j] * h[j];
            y[k] = acc;
        }
    }

    struct Grads {
        std::vector<T> w1, b1, w2, b2;
        void match(const Mlp& m) {
            w1.assign(m.w1.size(), T(0));
            b1.assign(m.b1.size(), T(0));
            w2.assign(m.w2.size(), T(0));
            b2.assign(m.b2.size(), T(0));
        }
        void zero() {
            std::fill(w1.begin(), w1.end(), T(0));
            std::fill(b1.begin(), b1.end(), T(0));
            std::fill(w2.begin(), w2.end(), T(0));
            std::fill(b2.begin(), b2.end(), T(0));
        }
    };

    // Accumulates parameter gradients for one sample given dL/dy. x and h
    // must be the forward-pass inputs/activations; dh is scratch of size
    // `hidden`.
    void backward(const T* x, const T* h, const T* dy, T* dh, Grads& g) const {
        for (int j = 0; j < hidden; ++j) dh[j] = T(0);
        for (int k = 0; k < out; ++k) {
            const T d = dy[k];
            if (d == T(0)) continue;
            const T* row = w2.data() + std::size_t(k) * std::size_t(hidden);
            T* grow = g.w2.data() + std::size_t(k) * std::size_t(hidden);
            for (int j = 0; j < hidden; ++j) {
                grow[j] += d * h[j];
                dh[j] += d * row[j];
            }
            g.b2[std::size_t(k)] += d;
        }
        for (int j = 0; j < hidden; ++j) {
            if (h[j] <= T(0) || dh[j] == T(0)) continue; // ReLU gate
            const T d = dh[j];
            T* grow = g.w1.data() + std::size_t(j) * std::size_t(in);
            for (int i = 0; i < in; ++i) grow[i] += d * x[i];
            g.b1[std::size_t(j)] += d;
        }
    }
};

template <typename T>
struct Adam {
    T lr = T(1e-3), beta1 = T(0.9), beta2 = T(0.999), eps = T(1e-8);
    std::vector<T> m, v;
    long t = 0;

    void match(const Mlp<T>& net) {
        const std::size_t n = net.w1.size() + net.b1.size() + net.w2.size() + net.b2.size();
        m.assign(n, T(0));
        v.assign(n, T(0));
        t = 0;
    }

    void step(Mlp<T>& net, const typename Mlp<T>::Grads& g) {
        ++t;
        const T c1 = T(1) - T(std::pow(double(beta1), double(t)));
        const T c2 = T(1) - T(std::pow(double(beta2), double(t)));
        std::size_t k = 0;
        auto apply = [&](std::vector<T>& p, const std::vector<T>& grad) {
            for (std::size_t i = 0; i < p.size(); ++i, ++k) {
                m[k] = beta1 * m[k] + (T(1) - beta1) * grad[i];
                v[k] = beta2 * v[k] + (T(1) - beta2) * grad[i] * grad[i];
                p[i] -= lr * (m[k] / c1) / (T(std::sqrt(double(v[k] / c2))) + eps);
            }
        };
        apply(net.w1, g.w1);
        apply(net.b1, g.b1);
        apply(net.w2, g.w2);
        apply(net.b2, g.b2);
    }
};

} // namespace honeysim
