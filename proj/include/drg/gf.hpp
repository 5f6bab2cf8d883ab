#pragma once

#include <string>
#include <vector>

namespace drg {

// Arithmetic tables for GF(p^k).  Elements are 0..q-1; an element encodes a
// polynomial over F_p in base p (value = sum coeff_i * p^i).  The modulus is
// the monic irreducible of degree k with the smallest encoded value, so the
// tables are a pure function of q.
class GF {
public:
    explicit GF(int q);

    int q() const { return q_; }
    int p() const { return p_; }
    int deg() const { return k_; }
    // Modulus coefficients c_0..c_k, low to high; c_k = 1.
    const std::vector<int>& modulus() const { return mod_; }

    int add(int a, int b) const { return add_[idx(a, b)]; }
    int neg(int a) const { return neg_[at(a)]; }
    int sub(int a, int b) const { return add_[idx(a, neg(b))]; }
    int mul(int a, int b) const { return mul_[idx(a, b)]; }
    int inv(int a) const;  // a != 0

private:
    int at(int a) const;
    int idx(int a, int b) const { return at(a) * q_ + at(b); }

    int q_ = 0;
    int p_ = 0;
    int k_ = 0;
    std::vector<int> mod_;
    std::vector<int> add_;
    std::vector<int> neg_;
    std::vector<int> mul_;
    std::vector<int> inv_;
};

}  // namespace drg
