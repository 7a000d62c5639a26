#ifndef CAG_MODEL_HPP
#define CAG_MODEL_HPP

#include <string>
#include <vector>

#include "cag/matrix.hpp"
#include "cag/types.hpp"

namespace cag {

// A geometry-free CA model: a circular sequence of 2n arc endpoints.
// Position p+1 follows position p clockwise; position 0 follows 2n-1.
// An arc covers the closed region from its Left endpoint clockwise to its
// Right endpoint. All positions are distinct, so no arc is the full circle.
class CircularModel {
public:
    CircularModel() = default;
    // Validates that each arc contributes exactly one Left and one Right.
    static CircularModel from_order(std::vector<Endpoint> order);

    int n() const { return n_; }
    int size() const { return static_cast<int>(order_.size()); }
    const Endpoint& at(int pos) const { return order_[pos]; }
    const std::vector<Endpoint>& order() const { return order_; }
    int position(int arc, Side s) const { return s == Side::Left ? pos_l_[arc] : pos_r_[arc]; }

    // Closed coverage of endpoint position p by arc a.
    bool covers_position(int a, int p) const;
    // Coverage of the open gap between positions g and g+1 (mod 2n).
    bool covers_gap(int a, int g) const;

private:
    std::vector<Endpoint> order_;
    std::vector<int> pos_l_, pos_r_;
    int n_ = 0;
};

// Classifies a pair of arcs given the circular positions of their endpoints.
IType classify_arcs(int la, int ra, int lb, int rb, int m);

IType intersection_type(const CircularModel& m, int i, int j);
IntersectionMatrix matrix_of(const CircularModel& m);

CircularModel reverse(const CircularModel& m);
CircularModel flip_arcs(const CircularModel& m, const std::vector<int>& X);

bool has_hole(const CircularModel& m);
bool is_helly_model(const CircularModel& m);

// Canonical model string: minimum over both orientations and all starting
// arcs of the relabeled endpoint sequence. Tokens compare by
// (arc id ascending, Left < Right). The optional per-arc colors participate
// as a third tie-breaking component and are carried into the text form.
struct ModelString {
    std::vector<Endpoint> tokens;      // relabeled, arcs 0-based
    std::vector<std::string> colors;   // per token; empty when uncolored
    std::string text() const;          // "L1 R1 L2 ..." (1-based ids)
    friend bool operator==(const ModelString&, const ModelString&) = default;
};

ModelString model_string(const CircularModel& m);
ModelString model_string(const CircularModel& m, const std::vector<std::string>& arc_colors);

// A model plus the vertex -> arc assignment realizing it.
struct Representation {
    CircularModel model;
    std::vector<int> arc_of; // vertex -> arc index in model
};

// Flips the arcs assigned to the vertices of X.
Representation flip_representation(const Representation& rho, const std::vector<int>& X);

} // namespace cag

#endif
