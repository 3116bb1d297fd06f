#ifndef EVG_TYPES_HPP
#define EVG_TYPES_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace evg {

// Raised on malformed or invalid instance files (carries a line number when known).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// A solver or generator was handed an instance outside its contract
// (non-complete graph for the clique solver, cyclic input for the tree DP, ...).
class PreconditionError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An enumeration guard tripped: the instance is too large for the requested method.
class WorkGuardError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal invariant violation; indicates a bug, not bad input.
class InternalError : public std::logic_error {
    using std::logic_error::logic_error;
};

#define EVG_CHECK(cond, msg)                                   \
    do {                                                       \
        if (!(cond)) throw ::evg::InternalError(msg);          \
    } while (0)

// Extended integers for DP tables: finite values plus -inf, with saturating add.
inline constexpr int kNegInf = std::numeric_limits<int>::min() / 4;

inline int ext_add(int a, int b) {
    if (a <= kNegInf || b <= kNegInf) return kNegInf;
    return a + b;
}

inline bool is_finite(int v) { return v > kNegInf; }

// A set of initially evangelized nodes. `members` is sorted and duplicate-free;
// `budget` records the beta the set was produced under, when any.
struct SeedSet {
    std::vector<int> members;
    std::optional<int> budget;

    int size() const { return static_cast<int>(members.size()); }
};

struct SolveResult {
    SeedSet seed;
    int objective = 0;          // |Inf[seed]| for MES, |seed| for PES
    std::string solver;
    std::uint64_t explored = 0; // candidate sets or DP work units examined
};

// Lexicographic order on sorted member lists; a proper prefix sorts first.
bool lex_less(const std::vector<int>& a, const std::vector<int>& b);

} // namespace evg

#endif
