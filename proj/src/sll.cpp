#include "pxom/sll.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace pxom {

Dsm Dsm::from_upper(const std::vector<std::vector<double>>& rows)
{
    Dsm d(rows.size());
    for (std::size_t g = 0; g < rows.size(); ++g) {
        if (rows[g].size() != rows.size()) {
            throw std::invalid_argument("Dsm::from_upper: matrix must be square");
        }
        for (std::size_t h = g + 1; h < rows.size(); ++h) {
            d.set(g, h, rows[g][h]);
        }
    }
    return d;
}

void Dsm::set(std::size_t g, std::size_t h, double value)
{
    if (g >= n_ || h >= n_) {
        throw std::out_of_range("Dsm::set: index out of range");
    }
    if (!std::isfinite(value) || value < 0.0 || value > 1.0) {
        throw std::invalid_argument("Dsm::set: value must be finite and within [0, 1]");
    }
    if (g == h) {
        return;
    }
    values_[g * n_ + h] = value;
    values_[h * n_ + g] = value;
}

double Dsm::max_abs_difference(const Dsm& other) const
{
    if (other.n_ != n_) {
        throw std::invalid_argument("Dsm::max_abs_difference: size mismatch");
    }
    double worst = 0.0;
    for (std::size_t g = 0; g < n_; ++g) {
        for (std::size_t h = g + 1; h < n_; ++h) {
            worst = std::max(worst, std::abs(at(g, h) - other.at(g, h)));
        }
    }
    return worst;
}

void Dsm::write(std::ostream& out) const
{
    out << n_ << '\n' << std::setprecision(17);
    for (std::size_t g = 0; g < n_; ++g) {
        bool first = true;
        for (std::size_t h = g + 1; h < n_; ++h) {
            out << (first ? "" : " ") << at(g, h);
            first = false;
        }
        out << '\n';
    }
}

Dsm Dsm::read(std::istream& in)
{
    std::size_t n = 0;
    if (!(in >> n)) {
        throw std::runtime_error("Dsm::read: missing size");
    }
    Dsm d(n);
    for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t h = g + 1; h < n; ++h) {
            double v = 0.0;
            if (!(in >> v)) {
                throw std::runtime_error("Dsm::read: truncated matrix");
            }
            d.set(g, h, v);
        }
    }
    return d;
}

double normalized_information(const std::array<double, 4>& joint)
{
    const double px0 = joint[0] + joint[1];
    const double px1 = joint[2] + joint[3];
    const double py0 = joint[0] + joint[2];
    const double py1 = joint[1] + joint[3];
    const double px[2] = {px0, px1};
    const double py[2] = {py0, py1};
    double mutual = 0.0;
    double entropy = 0.0;
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            const double p = joint[static_cast<std::size_t>(x * 2 + y)];
            if (p <= 0.0) {
                continue;
            }
            mutual += p * std::log2(p / (px[x] * py[y]));
            entropy -= p * std::log2(p);
        }
    }
    if (entropy <= 1e-15) {
        return 0.0;
    }
    return std::clamp(mutual / entropy, 0.0, 1.0);
}

void PairCounts::add(BitsView bits)
{
    if (bits.size() != n_) {
        throw std::invalid_argument("PairCounts::add: length mismatch");
    }
    for (std::size_t g = 0; g < n_; ++g) {
        const std::size_t row = (g * n_) * 4 + bits[g] * 2U;
        for (std::size_t h = g + 1; h < n_; ++h) {
            ++counts_[row + h * 4 + bits[h]];
        }
    }
    ++population_;
}

Dsm PairCounts::to_dsm() const
{
    Dsm d(n_);
    if (population_ == 0) {
        return d;
    }
    const double scale = 1.0 / static_cast<double>(population_);
    for (std::size_t g = 0; g < n_; ++g) {
        for (std::size_t h = g + 1; h < n_; ++h) {
            const std::size_t base = (g * n_ + h) * 4;
            std::array<double, 4> joint{};
            for (std::size_t c = 0; c < 4; ++c) {
                joint[c] = counts_[base + c] * scale;
            }
            d.set(g, h, normalized_information(joint));
        }
    }
    return d;
}

Dsm estimate_dsm(std::span<const Solution> population)
{
    if (population.empty()) {
        throw std::invalid_argument("estimate_dsm: empty population");
    }
    PairCounts counts(population.front().size());
    for (const auto& s : population) {
        counts.add(s.bits());
    }
    return counts.to_dsm();
}

bool LinkageTree::contains(const std::vector<std::size_t>& members) const
{
    std::vector<std::size_t> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    return std::any_of(nodes.begin(), nodes.end(), [&](const Node& node) { return node.members == sorted; });
}

void LinkageTree::write(std::ostream& out) const
{
    out << std::setprecision(6);
    for (std::size_t id = 0; id < nodes.size(); ++id) {
        const auto& node = nodes[id];
        out << id;
        if (node.leaf()) {
            out << " leaf " << node.members.front();
        } else {
            out << " node " << node.children->first << ' ' << node.children->second;
        }
        out << ' ' << node.strength << " :";
        for (auto m : node.members) {
            out << ' ' << m;
        }
        out << '\n';
    }
}

LinkageTree agglomerate(const Dsm& dsm, const std::vector<std::size_t>& leaves, Linkage linkage)
{
    LinkageTree tree;
    if (leaves.empty()) {
        return tree;
    }
    const std::size_t total = 2 * leaves.size() - 1;
    // pairwise link values between node ids; for average linkage this holds
    // the sum over cross pairs, divided by the size product on use
    std::vector<double> link(total * total, 0.0);
    auto cell = [&](std::size_t a, std::size_t b) -> double& { return link[a * total + b]; };

    for (auto leaf : leaves) {
        if (leaf >= dsm.size()) {
            throw std::out_of_range("agglomerate: leaf index outside the DSM");
        }
        tree.nodes.push_back({{leaf}, std::nullopt, 0.0});
    }
    for (std::size_t a = 0; a < leaves.size(); ++a) {
        for (std::size_t b = a + 1; b < leaves.size(); ++b) {
            const double d = dsm.at(leaves[a], leaves[b]);
            cell(a, b) = d;
            cell(b, a) = d;
        }
    }

    std::vector<std::size_t> active(leaves.size());
    for (std::size_t i = 0; i < active.size(); ++i) {
        active[i] = i;
    }

    auto strength = [&](std::size_t a, std::size_t b) {
        if (linkage == Linkage::maximum) {
            return cell(a, b);
        }
        const double pairs = static_cast<double>(tree.nodes[a].members.size() * tree.nodes[b].members.size());
        return cell(a, b) / pairs;
    };
    auto merged_members = [&](std::size_t a, std::size_t b) {
        std::vector<std::size_t> out;
        const auto& ma = tree.nodes[a].members;
        const auto& mb = tree.nodes[b].members;
        out.reserve(ma.size() + mb.size());
        std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(out));
        return out;
    };

    while (active.size() > 1) {
        std::size_t best_i = 0;
        std::size_t best_j = 1;
        double best = strength(active[0], active[1]);
        std::vector<std::size_t> best_union = merged_members(active[0], active[1]);
        for (std::size_t i = 0; i < active.size(); ++i) {
            for (std::size_t j = i + 1; j < active.size(); ++j) {
                if (i == 0 && j == 1) {
                    continue;
                }
                const double s = strength(active[i], active[j]);
                if (s < best) {
                    continue;
                }
                if (s > best) {
                    best = s;
                    best_i = i;
                    best_j = j;
                    best_union = merged_members(active[i], active[j]);
                    continue;
                }
                auto candidate = merged_members(active[i], active[j]);
                if (candidate < best_union) {
                    best_i = i;
                    best_j = j;
                    best_union = std::move(candidate);
                }
            }
        }

        const std::size_t a = active[best_i];
        const std::size_t b = active[best_j];
        const std::size_t c = tree.nodes.size();
        tree.nodes.push_back({std::move(best_union), std::make_pair(a, b), best});
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(best_j));
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(best_i));
        for (auto x : active) {
            const double v = linkage == Linkage::maximum ? std::max(cell(a, x), cell(b, x)) : cell(a, x) + cell(b, x);
            cell(c, x) = v;
            cell(x, c) = v;
        }
        active.push_back(c);
    }
    return tree;
}

LinkageTree build_lt(const Dsm& dsm)
{
    std::vector<std::size_t> leaves(dsm.size());
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        leaves[i] = i;
    }
    return agglomerate(dsm, leaves, Linkage::average);
}

std::optional<double> is_perfect(const Dsm& dsm, const Vig& vig)
{
    if (dsm.size() != vig.size()) {
        throw std::invalid_argument("is_perfect: size mismatch");
    }
    std::optional<double> min_dependent;
    std::optional<double> max_independent;
    for (std::size_t g = 0; g < dsm.size(); ++g) {
        for (std::size_t h = g + 1; h < dsm.size(); ++h) {
            const double d = dsm.at(g, h);
            if (vig.has_edge(g, h)) {
                min_dependent = min_dependent ? std::min(*min_dependent, d) : d;
            } else {
                max_independent = max_independent ? std::max(*max_independent, d) : d;
            }
        }
    }
    if (min_dependent && max_independent) {
        if (*min_dependent > *max_independent) {
            return 0.5 * (*min_dependent + *max_independent);
        }
        return std::nullopt;
    }
    if (max_independent) {
        return 0.5 * (*max_independent + 1.0);
    }
    if (min_dependent) {
        return 0.5 * (*min_dependent - 1.0);
    }
    return 0.0;
}

} // namespace pxom
