#include "ohba/list_assignment.hpp"

#include <algorithm>
#include <string>

namespace ohba {

ColorSet canonical_color_set(ColorSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

bool color_set_contains(const ColorSet& s, Color c) {
    return std::binary_search(s.begin(), s.end(), c);
}

bool color_set_subset(const ColorSet& sub, const ColorSet& super) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

ColorSet color_set_minus(const ColorSet& s, const ColorSet& remove) {
    ColorSet out;
    out.reserve(s.size());
    std::set_difference(s.begin(), s.end(), remove.begin(), remove.end(),
                        std::back_inserter(out));
    return out;
}

ColorSet color_range(Color lo, Color hi) {
    ColorSet out;
    for (Color c = lo; c <= hi; ++c) out.push_back(c);
    return out;
}

ListAssignment::ListAssignment(std::vector<ColorSet> lists) : lists_(std::move(lists)) {
    for (std::size_t v = 0; v < lists_.size(); ++v) {
        if (lists_[v].empty())
            throw ParamError("list assignment: empty list at vertex " + std::to_string(v));
        for (Color c : lists_[v])
            if (c < 0)
                throw ParamError("list assignment: negative color at vertex " +
                                 std::to_string(v));
        lists_[v] = canonical_color_set(std::move(lists_[v]));
    }
    if (!lists_.empty()) {
        const int k = static_cast<int>(lists_.front().size());
        bool uniform = true;
        for (const auto& l : lists_)
            if (static_cast<int>(l.size()) != k) { uniform = false; break; }
        if (uniform) uniform_size_ = k;
    }
}

ColorSet ListAssignment::palette() const {
    ColorSet all;
    for (const auto& l : lists_) all.insert(all.end(), l.begin(), l.end());
    return canonical_color_set(std::move(all));
}

ColorSet Coloring::range() const {
    return canonical_color_set(ColorSet(assignment.begin(), assignment.end()));
}

ColorSet Coloring::range_of(Vertex from, Vertex to) const {
    ColorSet out(assignment.begin() + from, assignment.begin() + to);
    return canonical_color_set(std::move(out));
}

} // namespace ohba
