#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rivercross {

/// A bijection on {1..n}, stored as its image array.
class Permutation {
public:
    explicit Permutation(std::vector<int> image) : image_(std::move(image)) {
        int n = static_cast<int>(image_.size());
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (int v : image_) {
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("Permutation: image is not a bijection on 1..n");
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> img(static_cast<std::size_t>(n));
        std::iota(img.begin(), img.end(), 1);
        return Permutation(std::move(img));
    }

    int size() const { return static_cast<int>(image_.size()); }
    bool is_identity() const {
        for (int i = 1; i <= size(); ++i)
            if (apply(i) != i) return false;
        return true;
    }

    int apply(int i) const {
        if (i < 1 || i > size()) throw std::out_of_range("Permutation: index out of range");
        return image_[static_cast<std::size_t>(i - 1)];
    }
    int operator()(int i) const { return apply(i); }

    /// Composition (*this) after g: i -> this(g(i)).
    Permutation after(const Permutation& g) const {
        if (g.size() != size()) throw std::invalid_argument("Permutation: size mismatch");
        std::vector<int> img(image_.size());
        for (int i = 1; i <= size(); ++i)
            img[static_cast<std::size_t>(i - 1)] = apply(g.apply(i));
        return Permutation(std::move(img));
    }

    Permutation inverse() const {
        std::vector<int> img(image_.size());
        for (int i = 1; i <= size(); ++i)
            img[static_cast<std::size_t>(apply(i) - 1)] = i;
        return Permutation(std::move(img));
    }

    /// If this is the cyclic shift i -> ((i - 1 + s) mod n) + 1, returns s.
    /// These shifts form the subgroup isomorphic to the rotations of a
    /// regular n-gon; they are exactly the permutations the lifting
    /// procedure ever applies.
    std::optional<int> rotation_offset() const {
        int n = size();
        int s = (apply(1) - 1 + n) % n;
        for (int i = 1; i <= n; ++i)
            if (apply(i) != (i - 1 + s) % n + 1) return std::nullopt;
        return s;
    }

    const std::vector<int>& image() const { return image_; }

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> image_;
};

/// Serialized as the one-line image array, e.g. [3,1,2] for 1->3, 2->1, 3->2.
inline std::string to_text(const Permutation& p) {
    std::string out = "[";
    for (int i = 1; i <= p.size(); ++i) {
        if (i > 1) out += ',';
        out += std::to_string(p.apply(i));
    }
    return out + "]";
}

inline Permutation parse_permutation(const std::string& text) {
    std::vector<int> img;
    std::size_t pos = 0;
    auto skip = [&] { while (pos < text.size() && text[pos] == ' ') ++pos; };
    skip();
    if (pos >= text.size() || text[pos] != '[')
        throw std::invalid_argument("parse: permutation must look like [3,1,2]");
    ++pos;
    while (true) {
        skip();
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start) throw std::invalid_argument("parse: expected a number in permutation");
        img.push_back(std::stoi(text.substr(start, pos - start)));
        skip();
        if (pos < text.size() && text[pos] == ',') { ++pos; continue; }
        break;
    }
    if (pos >= text.size() || text[pos] != ']')
        throw std::invalid_argument("parse: permutation must end with ]");
    ++pos;
    skip();
    if (pos != text.size()) throw std::invalid_argument("parse: trailing input after permutation");
    return Permutation(std::move(img));
}

/// All n! permutations in lexicographic image order. Cached per n; the cache
/// is guarded so concurrent law checks can share it.
inline const std::vector<Permutation>& all_permutations(int n) {
    static std::map<int, std::vector<Permutation>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> all;
    do {
        all.push_back(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return cache.emplace(n, std::move(all)).first->second;
}

}  // namespace rivercross
