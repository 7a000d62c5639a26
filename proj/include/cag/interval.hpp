#ifndef CAG_INTERVAL_HPP
#define CAG_INTERVAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "cag/matrix.hpp"
#include "cag/model.hpp"
#include "cag/types.hpp"

namespace cag {

// Interval model: 2n endpoints on a line, Left before Right for every arc.
class LinearModel {
public:
    LinearModel() = default;
    static LinearModel from_order(std::vector<Endpoint> order);

    int n() const { return n_; }
    int size() const { return static_cast<int>(order_.size()); }
    const Endpoint& at(int pos) const { return order_[pos]; }
    const std::vector<Endpoint>& order() const { return order_; }
    int position(int arc, Side s) const { return s == Side::Left ? pos_l_[arc] : pos_r_[arc]; }

    // The same endpoint sequence read circularly; the hole sits past the end.
    CircularModel as_circular() const;

private:
    std::vector<Endpoint> order_;
    std::vector<int> pos_l_, pos_r_;
    int n_ = 0;
};

IType intersection_type(const LinearModel& m, int i, int j);
IntersectionMatrix matrix_of(const LinearModel& m);

bool is_interval_matrix(const IntersectionMatrix& mu);

// Some interval model realizing mu (vertex v -> arc v), or nothing.
std::optional<LinearModel> represent_interval(const IntersectionMatrix& mu);

// One endpoint token of the canonical colored interval string.
struct IntervalToken {
    Side side;
    std::string color;
    int rank; // 1-based, order of first appearance
    friend auto operator<=>(const IntervalToken& a, const IntervalToken& b) {
        if (auto c = static_cast<int>(a.side) <=> static_cast<int>(b.side); c != 0) return c;
        if (auto c = a.color.compare(b.color); c != 0) return c <=> 0;
        return a.rank <=> b.rank;
    }
    friend bool operator==(const IntervalToken&, const IntervalToken&) = default;
};

std::string interval_tokens_to_string(const std::vector<IntervalToken>& toks);

struct IntervalCanonResult {
    std::vector<IntervalToken> tokens;
    LinearModel model;        // arc k = rank k+1
    std::vector<int> rank_of; // vertex -> rank (1-based)
    std::string str;
};

// Lexicographically least color-annotated endpoint string over all interval
// models of the colored matrix, by branch-and-bound; empty for non-interval
// input. The string (hence the model) is identical for isomorphic colored
// inputs under any relabeling.
std::optional<IntervalCanonResult> canonical_interval_representation(const IntersectionMatrix& mu);

} // namespace cag

#endif
