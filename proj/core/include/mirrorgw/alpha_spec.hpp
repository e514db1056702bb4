#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mirrorgw/rational.hpp"

namespace mgw {

class ResonanceError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Describes the first coincidence among the weights that the degree range up
// to max_degree cannot tolerate, or nothing when the weights are generic enough.
std::optional<std::string> find_resonance(const std::vector<Rational>& alpha, int a, int max_degree);

// Specialized torus weights alpha_1..alpha_n, checked for genericity up to a degree.
class AlphaSpec {
public:
    AlphaSpec(std::vector<Rational> alpha, int a, int max_degree);

    // alpha_i = i when generic enough, otherwise the first generic candidate.
    static AlphaSpec default_for(int n, int a, int max_degree);
    static AlphaSpec parse(const std::string& csv, int a, int max_degree);

    int n() const { return static_cast<int>(alpha_.size()); }
    int a() const { return a_; }
    int max_degree() const { return max_degree_; }
    const std::vector<Rational>& alpha() const { return alpha_; }
    const Rational& operator[](int i) const { return alpha_.at(static_cast<size_t>(i)); }
    // sigma_0..sigma_n
    const std::vector<Rational>& sigma() const { return sigma_; }
    // prod_{k != i} (alpha_i - alpha_k)
    const Rational& tangent_product(int i) const { return tangent_.at(static_cast<size_t>(i)); }
    std::string str() const;

private:
    std::vector<Rational> alpha_;
    int a_;
    int max_degree_;
    std::vector<Rational> sigma_;
    std::vector<Rational> tangent_;
};

}  // namespace mgw
