#ifndef CAG_TYPES_HPP
#define CAG_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cag {

// Intersection type of an (ordered) pair of arcs (a,b):
//   D  - disjoint
//   CD - a is contained by b
//   CS - a contains b
//   CC - a and b jointly cover the circle
//   OV - a and b overlap, union is not the whole circle
enum class IType : std::uint8_t { D = 0, CD, CS, CC, OV };

inline IType converse(IType t) {
    switch (t) {
    case IType::CD: return IType::CS;
    case IType::CS: return IType::CD;
    default: return t;
    }
}

inline char itype_char(IType t) {
    switch (t) {
    case IType::D: return '.';
    case IType::CD: return '<';
    case IType::CS: return '>';
    case IType::CC: return 'c';
    case IType::OV: return 'o';
    }
    return '?';
}

inline const char* itype_name(IType t) {
    switch (t) {
    case IType::D: return "D";
    case IType::CD: return "CD";
    case IType::CS: return "CS";
    case IType::CC: return "CC";
    case IType::OV: return "OV";
    }
    return "?";
}

inline bool itype_from_char(char c, IType& out) {
    switch (c) {
    case '.': out = IType::D; return true;
    case '<': out = IType::CD; return true;
    case '>': out = IType::CS; return true;
    case 'c': out = IType::CC; return true;
    case 'o': out = IType::OV; return true;
    default: return false;
    }
}

enum class Side : std::uint8_t { Left = 0, Right = 1 };

// One arc endpoint. Arcs are 0-based internally; text formats are 1-based.
struct Endpoint {
    int arc;
    Side side;
    friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace cag

#endif
