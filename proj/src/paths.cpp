#include "dqchar/paths.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>

namespace dqchar {

namespace {

int glued_offset(const PathFamily& fam) { return fam.rank - fam.node - 1; }

std::string fam_str(int rank, int node, int shift) {
    std::ostringstream os;
    os << "(n=" << rank << ", node=" << node << ", shift=" << shift << ")";
    return os.str();
}

}  // namespace

PathFamily family(int rank, int node, int shift) {
    if (rank < 4)
        throw std::invalid_argument("path family requires rank >= 4, got " +
                                    std::to_string(rank));
    if (node < 1 || node > rank - 1)
        throw std::invalid_argument("path family node must lie in 1..n-1, got " +
                                    fam_str(rank, node, shift));
    if (((node - shift) % 2 + 2) % 2 != 1)
        throw std::invalid_argument("parity violation: node - shift must be odd for " +
                                    fam_str(rank, node, shift));
    return PathFamily{rank, node, shift};
}

bool is_valid_member(const PathFamily& fam, const std::vector<int>& h) {
    const int n = fam.rank;
    if (fam.is_spin()) {
        if (static_cast<int>(h.size()) != n) return false;
        if (h[0] != n - 1 + fam.shift) return false;
        for (int j = 0; j + 1 < n; ++j)
            if (std::abs(h[j + 1] - h[j]) != 1) return false;
        return true;
    }
    if (static_cast<int>(h.size()) != 2 * n) return false;
    const int off = glued_offset(fam);
    if (h[0] != n - 1 + fam.shift - off) return false;
    if (h[2 * n - 1] != n - 1 + fam.shift + off) return false;
    // no step constraint between the two copies at flat positions n-1, n
    for (int j = 0; j < n - 1; ++j)
        if (std::abs(h[j + 1] - h[j]) != 1) return false;
    for (int j = n; j < 2 * n - 1; ++j)
        if (std::abs(h[j + 1] - h[j]) != 1) return false;
    return h[n - 1] >= h[n];
}

Path::Path(PathFamily fam, std::vector<int> heights)
    : fam_(fam), heights_(std::move(heights)) {
    if (!is_valid_member(fam_, heights_)) {
        std::ostringstream os;
        os << "not a member of " << fam_str(fam_.rank, fam_.node, fam_.shift) << ":";
        for (int v : heights_) os << ' ' << v;
        throw std::invalid_argument(os.str());
    }
}

std::string Path::to_string() const {
    std::ostringstream os;
    os << '(';
    const int n = fam_.rank;
    for (std::size_t j = 0; j < heights_.size(); ++j) {
        if (j > 0) os << (!is_spin() && static_cast<int>(j) == n ? " | " : ",");
        os << heights_[j];
    }
    os << ')';
    return os.str();
}

CornerSets corners(const Path& p) {
    CornerSets out;
    const int n = p.family().rank;
    const auto& h = p.heights();

    if (p.is_spin()) {
        for (int r = 1; r <= n - 2; ++r) {
            if (h[r - 1] == h[r] + 1 && h[r + 1] == h[r] + 1)
                out.upper.push_back({r, h[r], Polarity::Upper, false});
            else if (h[r - 1] == h[r] - 1 && h[r + 1] == h[r] - 1)
                out.lower.push_back({r, h[r], Polarity::Lower, false});
        }
        if (h[n - 2] == h[n - 1] + 1)
            out.upper.push_back({n - 1, h[n - 1], Polarity::Upper, false});
        else
            out.lower.push_back({n - 1, h[n - 1], Polarity::Lower, false});
        return out;
    }

    // interior columns; flat positions n-1 and n form the doubled column
    const int flat_count = 2 * n;
    for (int f = 1; f <= flat_count - 2; ++f) {
        if (f == n - 1 || f == n) continue;
        int x = f <= n - 2 ? f : f - 1;
        if (h[f - 1] == h[f] + 1 && h[f + 1] == h[f] + 1)
            out.upper.push_back({x, h[f], Polarity::Upper, false});
        else if (h[f - 1] == h[f] - 1 && h[f + 1] == h[f] - 1)
            out.lower.push_back({x, h[f], Polarity::Lower, false});
    }

    const int yl = p.left_middle(), yr = p.right_middle();
    const int entry_h = p.entry_height(), exit_h = p.exit_height();
    if (yl > yr) {
        // vertical travel: each copy carries exactly one polarity
        if (entry_h == yl + 1)
            out.upper.push_back({n - 1, yl, Polarity::Upper, false});
        else
            out.lower.push_back({n - 1, yl, Polarity::Lower, false});
        if (exit_h == yr + 1)
            out.upper.push_back({n - 1, yr, Polarity::Upper, true});
        else
            out.lower.push_back({n - 1, yr, Polarity::Lower, true});
    } else {
        // doubled-equal point: an upper corner can only be pushed through the
        // left copy and a lower corner only through the right one (the other
        // side would break the gluing inequality), so straight passes carry
        // no corner at all.
        if (entry_h == yl + 1) out.upper.push_back({n - 1, yl, Polarity::Upper, false});
        if (exit_h == yr - 1) out.lower.push_back({n - 1, yr, Polarity::Lower, true});
    }

    auto by_pos = [](const Corner& a, const Corner& b) {
        return std::tie(a.x, a.y, a.right_copy) < std::tie(b.x, b.y, b.right_copy);
    };
    std::sort(out.upper.begin(), out.upper.end(), by_pos);
    std::sort(out.lower.begin(), out.lower.end(), by_pos);
    return out;
}

namespace {

const Corner* find_corner(const std::vector<Corner>& cs, int x, int y) {
    for (const auto& c : cs)
        if (c.x == x && c.y == y) return &c;
    return nullptr;
}

// flat index of the height a corner owns
int corner_flat(const Path& p, const Corner& c) {
    const int n = p.family().rank;
    if (p.is_spin()) return c.x;
    if (c.x == n - 1) return c.right_copy ? n : n - 1;
    return c.x <= n - 2 ? c.x : c.x + 1;
}

}  // namespace

bool can_lower(const Path& p, MovePoint at) {
    CornerSets cs = corners(p);
    const Corner* c = find_corner(cs.upper, at.x, at.y - 1);
    if (c == nullptr) return false;
    return find_corner(cs.upper, at.x, at.y + 1) == nullptr;
}

Path lower_move(const Path& p, MovePoint at) {
    if (!can_lower(p, at))
        throw std::invalid_argument("path cannot be lowered at (" + std::to_string(at.x) +
                                    "," + std::to_string(at.y) + ")");
    CornerSets cs = corners(p);
    const Corner* c = find_corner(cs.upper, at.x, at.y - 1);
    std::vector<int> h = p.heights();
    h[corner_flat(p, *c)] += 2;
    return Path(p.family(), std::move(h));
}

namespace {

// Undo candidate: drop the lower corner at (x, y+1) by two; p is raisable
// there iff the candidate is a family member whose lowering at (x, y)
// restores p.
std::optional<Path> raise_candidate(const Path& p, MovePoint at) {
    CornerSets cs = corners(p);
    const Corner* c = find_corner(cs.lower, at.x, at.y + 1);
    if (c == nullptr) return std::nullopt;
    std::vector<int> h = p.heights();
    h[corner_flat(p, *c)] -= 2;
    if (!is_valid_member(p.family(), h)) return std::nullopt;
    Path candidate(p.family(), std::move(h));
    if (!can_lower(candidate, at)) return std::nullopt;
    if (!(lower_move(candidate, at) == p)) return std::nullopt;
    return candidate;
}

}  // namespace

bool can_raise(const Path& p, MovePoint at) { return raise_candidate(p, at).has_value(); }

Path raise_move(const Path& p, MovePoint at) {
    auto candidate = raise_candidate(p, at);
    if (!candidate)
        throw std::invalid_argument("path cannot be raised at (" + std::to_string(at.x) +
                                    "," + std::to_string(at.y) + ")");
    return *candidate;
}

std::vector<MovePoint> lowering_moves(const Path& p) {
    std::vector<MovePoint> out;
    CornerSets cs = corners(p);
    for (const auto& c : cs.upper) {
        MovePoint at{c.x, c.y + 1};
        if (can_lower(p, at)) out.push_back(at);
    }
    return out;
}

std::vector<MovePoint> raising_moves(const Path& p) {
    std::vector<MovePoint> out;
    CornerSets cs = corners(p);
    for (const auto& c : cs.lower) {
        MovePoint at{c.x, c.y - 1};
        if (can_raise(p, at)) out.push_back(at);
    }
    return out;
}

Path highest_path(const PathFamily& fam) {
    const int n = fam.rank, k = fam.shift, i = fam.node;
    std::vector<int> h;
    if (fam.is_spin()) {
        for (int j = 0; j <= n - 1; ++j) h.push_back(n - 1 + k - j);
        return Path(fam, std::move(h));
    }
    for (int j = 0; j <= n - 1; ++j) h.push_back(j <= i ? i + k - j : k + j - i);
    h.push_back(h[n - 1]);
    for (int x = n; x <= 2 * n - 2; ++x) h.push_back(k + x - i);
    return Path(fam, std::move(h));
}

Path lowest_path(const PathFamily& fam) {
    const int n = fam.rank, k = fam.shift, i = fam.node, N = 2 * n - 2;
    std::vector<int> h;
    if (fam.is_spin()) {
        for (int j = 0; j <= n - 1; ++j) h.push_back(n - 1 + k + j);
        return Path(fam, std::move(h));
    }
    for (int j = 0; j <= n - 1; ++j) h.push_back(i + k + j);
    h.push_back(h[n - 1]);
    for (int x = n; x <= N; ++x) h.push_back(x <= N - i ? i + k + x : k + 2 * N - i - x);
    return Path(fam, std::move(h));
}

Path join(const Path& p, const Path& q) {
    if (!(p.family() == q.family()))
        throw std::invalid_argument("join requires paths from the same family");
    std::vector<int> h(p.heights().size());
    for (std::size_t j = 0; j < h.size(); ++j)
        h[j] = std::min(p.heights()[j], q.heights()[j]);
    return Path(p.family(), std::move(h));
}

Path meet(const Path& p, const Path& q) {
    if (!(p.family() == q.family()))
        throw std::invalid_argument("meet requires paths from the same family");
    std::vector<int> h(p.heights().size());
    for (std::size_t j = 0; j < h.size(); ++j)
        h[j] = std::max(p.heights()[j], q.heights()[j]);
    return Path(p.family(), std::move(h));
}

namespace {

// all +-1-step continuations of prefix up to total length, ascending
void extend_free(std::vector<int>& prefix, int length,
                 const std::function<void(const std::vector<int>&)>& emit) {
    if (static_cast<int>(prefix.size()) == length) {
        emit(prefix);
        return;
    }
    for (int step : {-1, +1}) {
        prefix.push_back(prefix.back() + step);
        extend_free(prefix, length, emit);
        prefix.pop_back();
    }
}

// continuations pinned to reach `target` at the final position
void extend_anchored(std::vector<int>& prefix, int length, int target,
                     const std::function<void(const std::vector<int>&)>& emit) {
    int remaining = length - static_cast<int>(prefix.size());
    if (remaining == 0) {
        if (prefix.back() == target) emit(prefix);
        return;
    }
    for (int step : {-1, +1}) {
        int v = prefix.back() + step;
        int gap = std::abs(target - v);
        if (gap <= remaining - 1 && (gap % 2) == ((remaining - 1) % 2)) {
            prefix.push_back(v);
            extend_anchored(prefix, length, target, emit);
            prefix.pop_back();
        }
    }
}

}  // namespace

void for_each_path(const PathFamily& fam,
                   const std::function<void(const Path&)>& visit) {
    const int n = fam.rank, k = fam.shift;
    if (fam.is_spin()) {
        std::vector<int> prefix{n - 1 + k};
        extend_free(prefix, n, [&](const std::vector<int>& h) { visit(Path(fam, h)); });
        return;
    }

    const int off = glued_offset(fam);
    const int right_end = n - 1 + k + off;
    std::vector<int> left{n - 1 + k - off};
    extend_free(left, n, [&](const std::vector<int>& lh) {
        // right halves start at y'_{n-1} <= y_{n-1} and are anchored to the
        // fixed endpoint at x = N; ascending start keeps the concatenated
        // sequence lexicographic
        int lo = right_end - (n - 1);
        for (int start = lo; start <= lh[n - 1]; start += 2) {
            if (std::abs(right_end - start) > n - 1) continue;
            std::vector<int> right{start};
            extend_anchored(right, n, right_end, [&](const std::vector<int>& rh) {
                std::vector<int> h = lh;
                h.insert(h.end(), rh.begin(), rh.end());
                visit(Path(fam, std::move(h)));
            });
        }
    });
}

std::vector<Path> enumerate(const PathFamily& fam) {
    std::vector<Path> out;
    for_each_path(fam, [&](const Path& p) { out.push_back(p); });
    return out;
}

std::vector<Path> enumerate_by_moves(const PathFamily& fam) {
    std::vector<Path> out;
    std::set<std::vector<int>> seen;
    std::deque<Path> queue{highest_path(fam)};
    seen.insert(queue.front().heights());
    while (!queue.empty()) {
        Path p = std::move(queue.front());
        queue.pop_front();
        for (MovePoint at : lowering_moves(p)) {
            Path q = lower_move(p, at);
            if (seen.insert(q.heights()).second) queue.push_back(q);
        }
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace dqchar
