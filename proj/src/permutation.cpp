#include "twisted/permutation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "twisted/errors.hpp"

namespace twisted {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int m = size();
    if (m == 0) throw std::invalid_argument("permutation must be nonempty");
    std::vector<char> seen(static_cast<size_t>(m), 0);
    for (int v : images_) {
        if (v < 1 || v > m || seen[static_cast<size_t>(v) - 1])
            throw std::invalid_argument("not a permutation of 1..m");
        seen[static_cast<size_t>(v) - 1] = 1;
    }
}

Permutation Permutation::identity(int m) {
    std::vector<int> im(static_cast<size_t>(m));
    for (int k = 1; k <= m; ++k) im[static_cast<size_t>(k) - 1] = k;
    return Permutation(std::move(im));
}

Permutation Permutation::transposition(int m, int a, int b) {
    if (a == b) throw std::invalid_argument("transposition needs two distinct points");
    if (a < 1 || b < 1 || a > m || b > m) throw std::invalid_argument("transposition point out of range");
    Permutation t = identity(m);
    std::swap(t.images_[static_cast<size_t>(a) - 1], t.images_[static_cast<size_t>(b) - 1]);
    return t;
}

Permutation Permutation::reversal(int m) {
    std::vector<int> im(static_cast<size_t>(m));
    for (int k = 1; k <= m; ++k) im[static_cast<size_t>(k) - 1] = m + 1 - k;
    return Permutation(std::move(im));
}

Permutation Permutation::compose(const Permutation& v) const {
    if (size() != v.size()) throw std::invalid_argument("composition size mismatch");
    std::vector<int> im(images_.size());
    for (int k = 1; k <= size(); ++k) im[static_cast<size_t>(k) - 1] = (*this)(v(k));
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int k = 1; k <= size(); ++k) im[static_cast<size_t>((*this)(k)) - 1] = k;
    return Permutation(std::move(im));
}

int Permutation::length() const {
    int inv = 0;
    for (int i = 1; i <= size(); ++i)
        for (int j = i + 1; j <= size(); ++j)
            if ((*this)(i) > (*this)(j)) ++inv;
    return inv;
}

bool Permutation::is_involution() const {
    for (int k = 1; k <= size(); ++k)
        if ((*this)((*this)(k)) != k) return false;
    return true;
}

bool Permutation::has_fixed_point() const {
    for (int k = 1; k <= size(); ++k)
        if ((*this)(k) == k) return true;
    return false;
}

int Permutation::dot_count(int i, int j) const {
    if (i < 1 || j < 1 || i > size() || j > size())
        throw std::invalid_argument("dot count index out of range");
    int c = 0;
    for (int x = 1; x <= i; ++x)
        if ((*this)(x) >= j) ++c;
    return c;
}

std::vector<int> Permutation::dot_table() const {
    const int m = size();
    std::vector<int> t(static_cast<size_t>(m) * static_cast<size_t>(m));
    // Row recurrence: entry(i, j) = entry(i-1, j) + [u(i) >= j].
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            int above = (i > 1) ? t[static_cast<size_t>(i - 2) * m + (j - 1)] : 0;
            t[static_cast<size_t>(i - 1) * m + (j - 1)] = above + ((*this)(i) >= j ? 1 : 0);
        }
    return t;
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    if (size() <= 9) {
        for (int v : images_) os << v;
    } else {
        os << '[';
        for (size_t i = 0; i < images_.size(); ++i) {
            if (i) os << ',';
            os << images_[i];
        }
        os << ']';
    }
    return os.str();
}

std::optional<Permutation> Permutation::parse(const std::string& text) {
    std::vector<int> im;
    if (!text.empty() && text.front() == '[') {
        if (text.back() != ']') return std::nullopt;
        std::istringstream is(text.substr(1, text.size() - 2));
        std::string field;
        while (std::getline(is, field, ',')) {
            try {
                size_t used = 0;
                int v = std::stoi(field, &used);
                if (used != field.size()) return std::nullopt;
                im.push_back(v);
            } catch (const std::exception&) {
                return std::nullopt;
            }
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') return std::nullopt;
            im.push_back(c - '0');
        }
    }
    if (im.empty()) return std::nullopt;
    try {
        return Permutation(std::move(im));
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
    if (u.size() != v.size()) throw std::invalid_argument("Bruhat comparison size mismatch");
    const int m = u.size();
    // Running dot counts row by row; early exit on the first violation.
    std::vector<int> du(static_cast<size_t>(m) + 1, 0), dv(static_cast<size_t>(m) + 1, 0);
    for (int i = 1; i <= m; ++i) {
        for (int j = u(i); j >= 1; --j) ++du[static_cast<size_t>(j)];
        for (int j = v(i); j >= 1; --j) ++dv[static_cast<size_t>(j)];
        for (int j = 1; j <= m; ++j)
            if (du[static_cast<size_t>(j)] > dv[static_cast<size_t>(j)]) return false;
    }
    return true;
}

}  // namespace twisted
