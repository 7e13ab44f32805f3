#ifndef DQCHAR_PATHS_HPP
#define DQCHAR_PATHS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace dqchar {

// Descriptor of a path family P_{node,shift} at rank n.  Spin family for
// node = n-1, glued left/right family for node <= n-2.  Node n has no path
// family of its own; its q-character is produced by the spin-node swap.
struct PathFamily {
    int rank = 0;
    int node = 0;
    int shift = 0;

    bool is_spin() const { return node == rank - 1; }
    bool operator==(const PathFamily&) const = default;
};

// Validates n >= 4, 1 <= node <= n-1 and node - shift odd; throws
// std::invalid_argument otherwise.
PathFamily family(int rank, int node, int shift);

// Lattice path in the strip {0..2n-2} x Z, heights growing downward in the
// paper's figures.  Spin paths store n heights y_0..y_{n-1}.  Glued paths
// store 2n heights: the left half y_0..y_{n-1}, then the doubled column's
// right copy y'_{n-1}, then y_n..y_N.
class Path {
  public:
    Path(PathFamily fam, std::vector<int> heights);

    const PathFamily& family() const { return fam_; }
    const std::vector<int>& heights() const { return heights_; }

    bool is_spin() const { return fam_.is_spin(); }

    // Glued accessors for the doubled column.
    int left_middle() const { return heights_[fam_.rank - 1]; }
    int right_middle() const { return heights_[fam_.rank]; }

    // Neighbors of the doubled column.
    int entry_height() const { return heights_[fam_.rank - 2]; }
    int exit_height() const { return heights_[fam_.rank + 1]; }

    std::string to_string() const;

    bool operator==(const Path&) const = default;
    bool operator<(const Path& rhs) const { return heights_ < rhs.heights_; }

  private:
    PathFamily fam_;
    std::vector<int> heights_;
};

bool is_valid_member(const PathFamily& fam, const std::vector<int>& heights);

enum class Polarity { Upper, Lower };

// A local extremum of a path.  right_copy disambiguates the doubled
// x = n-1 column of a glued path; it is false everywhere else.
struct Corner {
    int x = 0;
    int y = 0;
    Polarity polarity = Polarity::Upper;
    bool right_copy = false;

    bool operator==(const Corner&) const = default;
};

struct CornerSets {
    std::vector<Corner> upper;
    std::vector<Corner> lower;
};

CornerSets corners(const Path& p);

// Lattice point at which a move acts: the vacated corner position plus one.
struct MovePoint {
    int x = 0;
    int y = 0;

    bool operator==(const MovePoint&) const = default;
};

// Lowering move p -> p*A^{-1}_{x,y}: the upper corner at (x, y-1) drops by
// two.  At the doubled column the corner's copy moves alone.
bool can_lower(const Path& p, MovePoint at);
Path lower_move(const Path& p, MovePoint at);

// Exact inverse: p can be raised at (x,y) iff p = lower_move(p', (x,y)) for
// a (then unique) family member p'.
bool can_raise(const Path& p, MovePoint at);
Path raise_move(const Path& p, MovePoint at);

// All lowering moves available on p.
std::vector<MovePoint> lowering_moves(const Path& p);
std::vector<MovePoint> raising_moves(const Path& p);

// Unique members with no lower (resp. upper) corners.
Path highest_path(const PathFamily& fam);
Path lowest_path(const PathFamily& fam);

// Pointwise min / max of the height vectors; members of the same family.
Path join(const Path& p, const Path& q);
Path meet(const Path& p, const Path& q);

// Visits every member exactly once, lexicographically ascending on the
// stored height vector.
void for_each_path(const PathFamily& fam, const std::function<void(const Path&)>& visit);

std::vector<Path> enumerate(const PathFamily& fam);

// Breadth-first closure of lowering moves from the highest path.
std::vector<Path> enumerate_by_moves(const PathFamily& fam);

}  // namespace dqchar

#endif
