#include "pxom/vig.hpp"

#include <stdexcept>

namespace pxom {

Vig Vig::from_rows(const std::vector<std::string_view>& rows)
{
    Vig g(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::size_t c = 0;
        for (char ch : rows[r]) {
            if (ch == ' ' || ch == '\t') {
                continue;
            }
            if (c >= rows.size()) {
                throw std::invalid_argument("Vig::from_rows: row too long");
            }
            if (ch == '1' && c != r) {
                g.adj_[r * g.n_ + c] = 1;
            } else if (ch != '0' && ch != '1' && c != r) {
                throw std::invalid_argument("Vig::from_rows: bad cell");
            }
            ++c;
        }
        if (c != rows.size()) {
            throw std::invalid_argument("Vig::from_rows: row too short");
        }
    }
    for (std::size_t a = 0; a < g.n_; ++a) {
        for (std::size_t b = 0; b < g.n_; ++b) {
            if (g.has_edge(a, b) != g.has_edge(b, a)) {
                throw std::invalid_argument("Vig::from_rows: matrix is not symmetric");
            }
        }
    }
    return g;
}

void Vig::add_clique(const std::vector<std::size_t>& members)
{
    for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
            add_edge(members[a], members[b]);
        }
    }
}

bool Vig::add_edge(std::size_t g, std::size_t h)
{
    if (g >= n_ || h >= n_) {
        throw std::out_of_range("Vig::add_edge: index out of range");
    }
    if (g == h || has_edge(g, h)) {
        return false;
    }
    adj_[g * n_ + h] = 1;
    adj_[h * n_ + g] = 1;
    return true;
}

std::size_t Vig::edge_count() const
{
    std::size_t count = 0;
    for (std::size_t g = 0; g < n_; ++g) {
        for (std::size_t h = g + 1; h < n_; ++h) {
            count += has_edge(g, h) ? 1 : 0;
        }
    }
    return count;
}

double Vig::density() const
{
    if (n_ < 2) {
        return 0.0;
    }
    return static_cast<double>(edge_count()) / static_cast<double>(n_ * (n_ - 1) / 2);
}

std::vector<std::size_t> Vig::neighbours(std::size_t g) const
{
    std::vector<std::size_t> out;
    for (std::size_t h = 0; h < n_; ++h) {
        if (has_edge(g, h)) {
            out.push_back(h);
        }
    }
    return out;
}

std::size_t Vig::internal_edges(const std::vector<std::size_t>& members) const
{
    std::size_t count = 0;
    for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
            count += has_edge(members[a], members[b]) ? 1 : 0;
        }
    }
    return count;
}

bool Vig::is_subgraph_of(const Vig& other) const
{
    if (other.n_ != n_) {
        return false;
    }
    for (std::size_t i = 0; i < adj_.size(); ++i) {
        if (adj_[i] && !other.adj_[i]) {
            return false;
        }
    }
    return true;
}

std::string Vig::to_string() const
{
    std::string s;
    for (std::size_t g = 0; g < n_; ++g) {
        for (std::size_t h = 0; h < n_; ++h) {
            s.push_back(g == h ? 'X' : (has_edge(g, h) ? '1' : '0'));
        }
        s.push_back('\n');
    }
    return s;
}

} // namespace pxom
