#include "drg/gf.hpp"

#include <stdexcept>

namespace drg {

namespace {

// Coefficient vectors are low-to-high over F_p, normalized (no trailing zeros).

std::vector<int> decode(int v, int p, int len) {
    std::vector<int> c(len, 0);
    for (int i = 0; i < len && v > 0; ++i) {
        c[i] = v % p;
        v /= p;
    }
    return c;
}

void trim(std::vector<int>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

// Remainder of a by monic m.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
    trim(a);
    while (a.size() >= m.size()) {
        int lead = a.back();
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) {
            int& t = a[shift + i];
            t = ((t - lead * m[i]) % p + p) % p;
        }
        trim(a);
    }
    return a;
}

bool divides(const std::vector<int>& d, const std::vector<int>& a, int p) {
    return poly_mod(a, d, p).empty();
}

// Trial division by every monic polynomial of degree 1..deg(m)/2.
bool irreducible(const std::vector<int>& m, int p) {
    int k = static_cast<int>(m.size()) - 1;
    for (int d = 1; 2 * d <= k; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int v = 0; v < count; ++v) {
            std::vector<int> cand = decode(v, p, d);
            cand.resize(d + 1, 0);
            cand[d] = 1;
            if (divides(cand, m, p)) return false;
        }
    }
    return true;
}

}  // namespace

GF::GF(int q) : q_(q) {
    if (q < 2) throw std::invalid_argument("GF: order must be at least 2");
    if (q > 4096) throw std::invalid_argument("GF: order too large for table arithmetic");
    int m = q;
    for (int d = 2; d <= m; ++d) {
        if (m % d == 0) {
            p_ = d;
            while (m % d == 0) {
                m /= d;
                ++k_;
            }
            break;
        }
    }
    if (m != 1) throw std::invalid_argument("GF: " + std::to_string(q) + " is not a prime power");

    if (k_ > 1) {
        int count = 1;
        for (int i = 0; i < k_; ++i) count *= p_;
        for (int v = 0; v < count; ++v) {
            std::vector<int> cand = decode(v, p_, k_);
            cand.resize(k_ + 1, 0);
            cand[k_] = 1;
            if (irreducible(cand, p_)) {
                mod_ = cand;
                break;
            }
        }
    }

    auto encode = [&](const std::vector<int>& c) {
        int v = 0;
        for (size_t i = c.size(); i-- > 0;) v = v * p_ + c[i];
        return v;
    };

    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
        std::vector<int> ca = decode(a, p_, k_);
        std::vector<int> nc(k_);
        for (int i = 0; i < k_; ++i) nc[i] = (p_ - ca[i]) % p_;
        neg_[a] = encode(nc);
        for (int b = 0; b < q_; ++b) {
            std::vector<int> cb = decode(b, p_, k_);
            std::vector<int> s(k_);
            for (int i = 0; i < k_; ++i) s[i] = (ca[i] + cb[i]) % p_;
            add_[a * q_ + b] = encode(s);
            std::vector<int> prod = poly_mul(ca, cb, p_);
            if (k_ > 1) prod = poly_mod(prod, mod_, p_);
            prod.resize(k_, 0);
            mul_[a * q_ + b] = encode(prod);
        }
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1) {
                inv_[a] = b;
                break;
            }
}

int GF::at(int a) const {
    if (a < 0 || a >= q_) throw std::out_of_range("GF: element out of range");
    return a;
}

int GF::inv(int a) const {
    if (at(a) == 0) throw std::domain_error("GF: zero has no inverse");
    return inv_[a];
}

}  // namespace drg
