#include "kalu/schubert.hpp"

#include <algorithm>
#include <sstream>

namespace kalu {

namespace {

std::string describe(const SchubertDatum& d) {
    std::ostringstream out;
    out << "k=" << d.k << " l=" << d.l << " I=" << to_text(d.I) << " J=" << to_text(d.J);
    return out.str();
}

void check_weak(const SchubertDatum& d, const std::vector<int>& targets,
                std::vector<Violation>& out) {
    const int w = d.arity();
    for (int a = 0; a < w; ++a) {
        if (targets[a] < 0)
            out.push_back({"target_non_negative",
                           "target " + std::to_string(a + 1) + " is " + std::to_string(targets[a])});
        if (a + 1 < w && targets[a] > targets[a + 1])
            out.push_back({"targets_monotone", "target " + std::to_string(a + 1) + " exceeds target " +
                                                   std::to_string(a + 2)});
        if (targets[a] > d.k)
            out.push_back({"target_le_k", "target " + std::to_string(a + 1) + " = " +
                                              std::to_string(targets[a]) + " exceeds k = " +
                                              std::to_string(d.k)});
        if (targets[a] > d.J[a])
            out.push_back({"target_le_j", "target " + std::to_string(a + 1) + " = " +
                                              std::to_string(targets[a]) + " exceeds j_" +
                                              std::to_string(a + 1) + " = " + std::to_string(d.J[a])});
        if (a + 1 < w && targets[a + 1] - targets[a] > d.J[a + 1] - d.J[a])
            out.push_back({"target_gaps", "target gap at " + std::to_string(a + 1) +
                                              " exceeds the flag gap"});
        if (targets[a] > std::min(d.k, d.J[a]))
            out.push_back({"empty", "condition " + std::to_string(a + 1) +
                                        " cannot be met by any k-plane; the variety is empty"});
    }
    if (w > 0 && d.k > d.l + targets[w - 1] - d.J[w - 1])
        out.push_back({"tail", "k exceeds l + target_last - j_last; the last condition is "
                               "incompatible with the ambient dimension"});
}

}  // namespace

std::string to_text(const CondVector& v) {
    if (v.empty()) return "()";
    std::ostringstream out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out << ",";
        out << v[i];
    }
    return out.str();
}

std::vector<int> EssentialPair::targets() const {
    std::vector<int> t(i_bar.size());
    for (size_t a = 0; a < i_bar.size(); ++a) t[a] = i_bar[a] + p_bar[a];
    return t;
}

std::vector<Violation> validate(const SchubertDatum& d) {
    std::vector<Violation> out;
    if (d.I.size() != d.J.size()) {
        out.push_back({"arity", "I and J have different lengths"});
        return out;
    }
    if (d.k < 1) out.push_back({"k_positive", "k must be at least 1"});
    if (d.l <= d.k) out.push_back({"k_below_l", "k must be below l"});
    if (!out.empty()) return out;
    if (d.arity() == 0) return out;  // no conditions: the whole Grassmannian
    for (int a = 0; a + 1 < d.arity(); ++a)
        if (d.J[a] >= d.J[a + 1])
            out.push_back({"j_increasing", "flag dimensions must strictly increase"});
    if (d.J.back() >= d.l)
        out.push_back({"j_below_l", "the last flag dimension must be below l"});
    if (d.J.front() < d.k)
        out.push_back({"k_le_j1", "k = " + std::to_string(d.k) + " exceeds the first flag dimension " +
                                       std::to_string(d.J.front())});
    if (!out.empty()) return out;
    check_weak(d, d.I, out);
    return out;
}

std::vector<Violation> validate_targets(const SchubertDatum& d, const CondVector& p) {
    std::vector<Violation> out = validate(d);
    if (!out.empty()) return out;
    if (static_cast<int>(p.size()) != d.arity()) {
        out.push_back({"arity", "offset vector length differs from the number of conditions"});
        return out;
    }
    std::vector<int> targets(d.arity());
    for (int a = 0; a < d.arity(); ++a) {
        if (p[a] < 0) out.push_back({"offset_non_negative", "offsets must be non-negative"});
        targets[a] = d.I[a] + p[a];
    }
    if (!out.empty()) return out;
    check_weak(d, targets, out);
    return out;
}

void require_valid(const SchubertDatum& d) {
    auto v = validate(d);
    if (v.empty()) return;
    throw validation_error("invalid datum (" + describe(d) + "): " + v.front().name + ": " +
                           v.front().detail);
}

void require_valid_targets(const SchubertDatum& d, const CondVector& p) {
    auto v = validate_targets(d, p);
    if (v.empty()) return;
    throw validation_error("invalid offsets " + to_text(p) + " for (" + describe(d) + "): " +
                           v.front().name + ": " + v.front().detail);
}

EssentialPair essentialize(const SchubertDatum& d, const CondVector& p) {
    require_valid_targets(d, p);
    const int w = d.arity();
    std::vector<int> pos, e, j;
    for (int a = 0; a < w; ++a) {
        if (d.I[a] + p[a] == 0) continue;  // a target of 0 asks nothing
        pos.push_back(a);
        e.push_back(d.I[a] + p[a]);
        j.push_back(d.J[a]);
    }
    auto erase_at = [&](size_t idx) {
        pos.erase(pos.begin() + idx);
        e.erase(e.begin() + idx);
        j.erase(j.begin() + idx);
    };
    bool changed = true;
    while (changed) {
        changed = false;
        // a condition dominated by an earlier one (same or larger target) is implied
        for (size_t b = 1; b < e.size();) {
            if (e[b - 1] >= e[b]) {
                erase_at(b);
                changed = true;
            } else {
                ++b;
            }
        }
        // a condition whose slack j - target reappears later is implied by the later one
        for (size_t b = e.size(); b-- > 1;) {
            if (j[b] - e[b] <= j[b - 1] - e[b - 1]) {
                erase_at(b - 1);
                changed = true;
            }
        }
        // trailing conditions with slack >= l - k hold for every k-plane
        while (!e.empty() && j.back() - e.back() >= d.l - d.k) {
            erase_at(e.size() - 1);
            changed = true;
        }
    }
    EssentialPair out;
    out.positions = pos;
    for (size_t b = 0; b < pos.size(); ++b) {
        out.i_bar.push_back(d.I[pos[b]]);
        out.j_bar.push_back(d.J[pos[b]]);
        out.p_bar.push_back(e[b] - d.I[pos[b]]);
    }
    for (size_t b = 0; b + 1 < e.size(); ++b)
        if (e[b] >= e[b + 1] || j[b] - e[b] >= j[b + 1] - e[b + 1])
            throw internal_error("essentialization did not reach the essential conditions for " +
                                 to_text(p) + " over (" + describe(d) + ")");
    return out;
}

Partition lambda_of(const SchubertDatum& d, const CondVector& p) {
    EssentialPair ess = essentialize(d, p);
    Partition parts(d.k, 0);
    const auto targets = ess.targets();
    int prev = 0;
    for (int b = 0; b < ess.arity(); ++b) {
        const int value = d.l - d.k - ess.j_bar[b] + targets[b];
        for (int a = prev + 1; a <= targets[b]; ++a) parts[a - 1] = value;
        prev = targets[b];
    }
    for (int a = 0; a < d.k; ++a) {
        if (parts[a] < 0 || parts[a] > d.l - d.k || (a > 0 && parts[a] > parts[a - 1]))
            throw internal_error("diagram of " + to_text(p) + " over (" + describe(d) +
                                 ") is not a partition in its frame");
    }
    return parts;
}

long area(const Partition& lam) {
    long s = 0;
    for (int a : lam) s += a;
    return s;
}

long dim_grassmannian(int k, int l) { return static_cast<long>(k) * (l - k); }

long dim_variety(const SchubertDatum& d, const CondVector& p) {
    return dim_grassmannian(d.k, d.l) - area(lambda_of(d, p));
}

CondVector presentation_over(const SchubertDatum& frame, const Partition& lam) {
    if (static_cast<int>(lam.size()) != frame.k)
        throw internal_error("partition length differs from k");
    CondVector q(frame.arity());
    for (int b = 0; b < frame.arity(); ++b) {
        // the number of forced intersection jumps at or below flag dimension j_b
        int count = 0;
        for (int a = 1; a <= frame.k; ++a)
            if (lam[a - 1] >= frame.l - frame.k + a - frame.J[b]) ++count;
        q[b] = count - frame.I[b];
        if (q[b] < 0)
            throw internal_error("diagram is not presentable over the flag: target below the base");
    }
    if (lambda_of(frame, q) != lam)
        throw internal_error("diagram is not presentable over the given flag");
    return q;
}

std::string render_ferrers(const Partition& lam, int k, int l) {
    const int width = l - k;
    std::ostringstream out;
    const std::string edge = "+" + std::string(width, '-') + "+";
    out << edge << "\n";
    for (int a = 0; a < k; ++a) {
        const int filled = a < static_cast<int>(lam.size()) ? lam[a] : 0;
        out << "|" << std::string(filled, '#') << std::string(width - filled, ' ') << "|\n";
    }
    out << edge;
    return out.str();
}

}  // namespace kalu
