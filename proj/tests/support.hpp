#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <thread>
#include <vector>

#include "kalu/engine.hpp"

namespace support {

// Every datum satisfying the essential conditions within the bounds:
// 0 < i_1 < ... < i_w < k <= j_1 < ... < j_w < l, i_a < j_a, every target
// gap strictly below its flag gap, and the last condition binding
// (j_w - i_w < l - k). Each such datum names a distinct variety.
inline std::vector<kalu::SchubertDatum> essential_data(int max_arity, int max_l) {
    std::vector<kalu::SchubertDatum> out;
    std::vector<int> I, J;
    for (int l = 2; l <= max_l; ++l) {
        for (int k = 1; k < l; ++k) {
            const int top = std::min(max_arity, k);
            for (int w = 1; w <= top; ++w) {
                std::function<void(int)> extend = [&](int a) {
                    if (a == w) {
                        if (J.back() - I.back() < l - k) {
                            kalu::SchubertDatum d{k, l, I, J};
                            if (kalu::validate(d).empty()) out.push_back(std::move(d));
                        }
                        return;
                    }
                    for (int j = a == 0 ? k : J[a - 1] + 1; j < l; ++j) {
                        int hi = std::min(k - 1, j - 1);
                        if (a > 0) hi = std::min(hi, I[a - 1] + (j - J[a - 1]) - 1);
                        for (int i = a == 0 ? 1 : I[a - 1] + 1; i <= hi; ++i) {
                            I.push_back(i);
                            J.push_back(j);
                            extend(a + 1);
                            I.pop_back();
                            J.pop_back();
                        }
                    }
                };
                extend(0);
            }
        }
    }
    return out;
}

template <typename T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& pool) {
    return pool[std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng)];
}

inline kalu::Integer binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    kalu::Integer out = 1;
    for (int a = 1; a <= r; ++a) {
        out *= n - r + a;
        out /= a;
    }
    return out;
}

// Runs body(0..count-1) across hardware threads; body must only touch its
// own slot of any shared output.
inline void parallel_for(size_t count, const std::function<void(size_t)>& body) {
    const size_t width =
        std::min<size_t>(std::max(1u, std::thread::hardware_concurrency()), count);
    if (width <= 1) {
        for (size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(width);
    for (size_t t = 0; t < width; ++t)
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
        });
    for (std::thread& t : pool) t.join();
}

}  // namespace support
