#include "pxom/problems.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace pxom {

double dec(std::size_t u, std::size_t k)
{
    if (k == 0 || u > k) {
        throw std::invalid_argument("dec: unitation " + std::to_string(u) + " out of range for order " +
                                    std::to_string(k));
    }
    if (u == k) {
        return static_cast<double>(k);
    }
    return static_cast<double>(k - 1 - u);
}

double bim(std::size_t u, std::size_t k)
{
    if (k == 0 || k % 2 != 0) {
        throw std::invalid_argument("bim: order must be even and positive");
    }
    if (u > k) {
        throw std::invalid_argument("bim: unitation " + std::to_string(u) + " out of range for order " +
                                    std::to_string(k));
    }
    const double half = static_cast<double>(k) / 2.0;
    if (u == 0 || u == k) {
        return half;
    }
    return half - std::abs(static_cast<double>(u) - half) - 1.0;
}

double BlockFunction::max_value() const
{
    return kind == Kind::dec ? static_cast<double>(order) : static_cast<double>(order) / 2.0;
}

double BlockFunction::attractor_value() const
{
    return kind == Kind::dec ? static_cast<double>(order) - 1.0 : static_cast<double>(order) / 2.0 - 1.0;
}

double BlockFunction::random_mean() const
{
    double mean = 0.0;
    double binom = 1.0;
    const double scale = std::ldexp(1.0, -static_cast<int>(order));
    for (std::size_t u = 0; u <= order; ++u) {
        mean += binom * scale * (*this)(u);
        binom = binom * static_cast<double>(order - u) / static_cast<double>(u + 1);
    }
    return mean;
}

OverlapLayout OverlapLayout::regular(std::size_t order, std::size_t overlap, std::size_t count, bool cyclic)
{
    if (order == 0 || overlap >= order) {
        throw std::invalid_argument("OverlapLayout: overlap must be smaller than the block order");
    }
    if (count == 0) {
        throw std::invalid_argument("OverlapLayout: at least one block required");
    }
    const std::size_t stride = order - overlap;
    OverlapLayout layout;
    layout.overlap_ = overlap;
    layout.cyclic_ = cyclic && overlap > 0;
    layout.n_ = layout.cyclic_ ? count * stride : count * stride + overlap;
    if (layout.cyclic_ && layout.n_ < order) {
        throw std::invalid_argument("OverlapLayout: cyclic layout too small for block order");
    }
    for (std::size_t b = 0; b < count; ++b) {
        std::vector<std::size_t> block(order);
        for (std::size_t j = 0; j < order; ++j) {
            block[j] = (b * stride + j) % layout.n_;
        }
        layout.blocks_.push_back(std::move(block));
    }
    return layout;
}

std::size_t OverlapLayout::blocks_for_size(std::size_t n, std::size_t order, std::size_t overlap, bool cyclic)
{
    if (overlap >= order) {
        throw std::invalid_argument("OverlapLayout: overlap must be smaller than the block order");
    }
    const std::size_t stride = order - overlap;
    const bool wraps = cyclic && overlap > 0;
    const std::size_t body = wraps ? n : (n >= overlap ? n - overlap : 0);
    if (body == 0 || body % stride != 0) {
        throw std::invalid_argument("size " + std::to_string(n) + " is not consistent with order " +
                                    std::to_string(order) + " and overlap " + std::to_string(overlap));
    }
    return body / stride;
}

OverlapLayout OverlapLayout::custom(std::size_t n, std::vector<std::vector<std::size_t>> blocks)
{
    OverlapLayout layout;
    layout.n_ = n;
    for (const auto& block : blocks) {
        if (block.empty()) {
            throw std::invalid_argument("OverlapLayout: empty block");
        }
        for (auto i : block) {
            if (i >= n) {
                throw std::invalid_argument("OverlapLayout: block index out of range");
            }
        }
    }
    layout.blocks_ = std::move(blocks);
    return layout;
}

Vig OverlapLayout::interaction_graph() const
{
    Vig g(n_);
    for (const auto& block : blocks_) {
        g.add_clique(block);
    }
    return g;
}

namespace {

void check_layout(const OverlapLayout& layout, BitsView x)
{
    if (x.size() != layout.size()) {
        throw std::invalid_argument("layout size " + std::to_string(layout.size()) +
                                    " does not match solution length " + std::to_string(x.size()));
    }
}

std::size_t block_unitation(const std::vector<std::size_t>& block, BitsView x)
{
    std::size_t u = 0;
    for (auto i : block) {
        u += x[i];
    }
    return u;
}

} // namespace

double evaluate_overlapping_sum(const OverlapLayout& layout, const BlockFunction& base, BitsView x)
{
    check_layout(layout, x);
    double total = 0.0;
    for (const auto& block : layout.blocks()) {
        total += base(block_unitation(block, x));
    }
    return total;
}

double evaluate_overlapping_product(const OverlapLayout& layout, const BlockFunction& base, BitsView x)
{
    check_layout(layout, x);
    double total = 1.0;
    for (const auto& block : layout.blocks()) {
        total *= base(block_unitation(block, x)) + 1.0;
    }
    return total;
}

BlockSumProblem::BlockSumProblem(std::string name, OverlapLayout layout, BlockFunction base)
    : name_(std::move(name)), layout_(std::move(layout)), base_(base)
{
    for (const auto& block : layout_.blocks()) {
        if (block.size() != base_.order) {
            throw std::invalid_argument("BlockSumProblem: block size differs from function order");
        }
    }
}

double BlockSumProblem::value(BitsView x) const { return evaluate_overlapping_sum(layout_, base_, x); }

std::optional<double> BlockSumProblem::optimum() const
{
    // all-ones maximizes every block simultaneously for both trap kinds
    return static_cast<double>(layout_.blocks().size()) * base_.max_value();
}

std::optional<double> BlockSumProblem::attractor_value() const
{
    return static_cast<double>(layout_.blocks().size()) * base_.attractor_value();
}

std::optional<double> BlockSumProblem::random_mean() const
{
    return static_cast<double>(layout_.blocks().size()) * base_.random_mean();
}

BlockProductProblem::BlockProductProblem(std::string name, OverlapLayout layout, BlockFunction base)
    : name_(std::move(name)), layout_(std::move(layout)), base_(base)
{
}

double BlockProductProblem::value(BitsView x) const { return evaluate_overlapping_product(layout_, base_, x); }

std::optional<double> BlockProductProblem::optimum() const
{
    return std::pow(base_.max_value() + 1.0, static_cast<double>(layout_.blocks().size()));
}

FunctionProblem::FunctionProblem(std::string name, std::size_t n, Fn fn, std::optional<double> optimum,
                                 std::optional<Vig> vig)
    : name_(std::move(name)), n_(n), fn_(std::move(fn)), optimum_(optimum), vig_(std::move(vig))
{
}

// ---------------------------------------------------------------------------
// NK landscapes

NkLandscape::NkLandscape(std::size_t n, std::size_t k, std::uint64_t seed,
                         std::vector<std::vector<std::size_t>> neighbours, std::vector<std::vector<double>> tables)
    : n_(n), k_(k), seed_(seed), neighbours_(std::move(neighbours)), tables_(std::move(tables))
{
    if (k >= n) {
        throw std::invalid_argument("NkLandscape: k must be smaller than n");
    }
    if (neighbours_.size() != n || tables_.size() != n) {
        throw std::invalid_argument("NkLandscape: expected one neighbour list and table per position");
    }
    const std::size_t entries = std::size_t{1} << (k + 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (neighbours_[i].size() != k || tables_[i].size() != entries) {
            throw std::invalid_argument("NkLandscape: malformed neighbour list or table at position " +
                                        std::to_string(i));
        }
        for (auto nb : neighbours_[i]) {
            if (nb >= n || nb == i) {
                throw std::invalid_argument("NkLandscape: invalid neighbour at position " + std::to_string(i));
            }
        }
    }
}

NkLandscape NkLandscape::generate(std::size_t n, std::size_t k, std::uint64_t seed)
{
    if (k >= n) {
        throw std::invalid_argument("NkLandscape: k must be smaller than n");
    }
    Rng rng(seed);
    std::vector<std::vector<std::size_t>> neighbours(n);
    std::vector<std::vector<double>> tables(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> others;
        others.reserve(n - 1);
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) {
                others.push_back(j);
            }
        }
        // partial Fisher-Yates: first k entries are a uniform k-subset
        for (std::size_t j = 0; j < k; ++j) {
            std::swap(others[j], others[j + rng.below(others.size() - j)]);
        }
        neighbours[i].assign(others.begin(), others.begin() + static_cast<std::ptrdiff_t>(k));
        tables[i].resize(std::size_t{1} << (k + 1));
        for (auto& v : tables[i]) {
            v = rng.uniform();
        }
    }
    return NkLandscape(n, k, seed, std::move(neighbours), std::move(tables));
}

double NkLandscape::value(BitsView x) const
{
    if (x.size() != n_) {
        throw std::invalid_argument("NkLandscape: length mismatch");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        std::size_t index = x[i];
        for (auto nb : neighbours_[i]) {
            index = (index << 1) | x[nb];
        }
        total += tables_[i][index];
    }
    return total;
}

std::string NkLandscape::name() const { return "nk-landscape"; }

std::optional<Vig> NkLandscape::interaction_graph() const
{
    Vig g(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        std::vector<std::size_t> members = neighbours_[i];
        members.push_back(i);
        g.add_clique(members);
    }
    return g;
}

namespace {

/// Whitespace tokenizer that remembers where each token came from.
class TokenReader {
public:
    explicit TokenReader(std::istream& in) : in_(in) {}

    bool next(std::string& token)
    {
        token.clear();
        while (true) {
            if (pos_ >= line_.size()) {
                if (!std::getline(in_, line_)) {
                    return false;
                }
                ++line_no_;
                pos_ = 0;
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(line_[pos_]))) {
                ++pos_;
                continue;
            }
            column_ = pos_ + 1;
            while (pos_ < line_.size() && !std::isspace(static_cast<unsigned char>(line_[pos_]))) {
                token.push_back(line_[pos_++]);
            }
            return true;
        }
    }

    template <class T>
    T read(const char* what)
    {
        std::string token;
        if (!next(token)) {
            throw ParseError(std::string("unexpected end of file, expected ") + what, line_no_ + 1, 1);
        }
        std::istringstream ss(token);
        T value{};
        ss >> value;
        if (!ss || !ss.eof()) {
            throw ParseError(std::string("expected ") + what + ", got '" + token + "'", line_no_, column_);
        }
        return value;
    }

    std::size_t line() const { return line_no_; }
    std::size_t column() const { return column_; }

private:
    std::istream& in_;
    std::string line_;
    std::size_t pos_ = 0;
    std::size_t line_no_ = 0;
    std::size_t column_ = 0;
};

std::ifstream open_or_throw(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open instance file " + path.string());
    }
    return in;
}

} // namespace

NkLandscape NkLandscape::load(const std::filesystem::path& path)
{
    auto in = open_or_throw(path);
    TokenReader reader(in);
    const auto n = reader.read<std::size_t>("n");
    const auto k = reader.read<std::size_t>("k");
    const auto seed = reader.read<std::uint64_t>("seed");
    if (n == 0 || k >= n) {
        throw ParseError("invalid header: need 0 <= k < n", 1, 1);
    }
    std::vector<std::vector<std::size_t>> neighbours(n);
    std::vector<std::vector<double>> tables(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            const auto nb = reader.read<std::size_t>("neighbour index");
            if (nb >= n || nb == i) {
                throw ParseError("neighbour index out of range", reader.line(), reader.column());
            }
            neighbours[i].push_back(nb);
        }
        tables[i].resize(std::size_t{1} << (k + 1));
        for (auto& v : tables[i]) {
            v = reader.read<double>("table entry");
        }
    }
    std::string extra;
    if (reader.next(extra)) {
        throw ParseError("trailing data '" + extra + "'", reader.line(), reader.column());
    }
    return NkLandscape(n, k, seed, std::move(neighbours), std::move(tables));
}

void NkLandscape::save(const std::filesystem::path& path) const
{
    std::ofstream out(path);
    out << n_ << ' ' << k_ << ' ' << seed_ << '\n';
    out << std::setprecision(17);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < k_; ++j) {
            out << (j ? " " : "") << neighbours_[i][j];
        }
        out << '\n';
        for (std::size_t j = 0; j < tables_[i].size(); ++j) {
            out << (j ? " " : "") << tables_[i][j];
        }
        out << '\n';
    }
    if (!out) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

// ---------------------------------------------------------------------------
// Ising spin glass

IsingSpinGlass::IsingSpinGlass(std::size_t side, std::vector<Coupling> couplings)
    : side_(side), couplings_(std::move(couplings))
{
    if (side == 0) {
        throw std::invalid_argument("IsingSpinGlass: lattice side must be positive");
    }
    for (const auto& c : couplings_) {
        if (c.i >= size() || c.j >= size() || c.i == c.j || (c.weight != 1 && c.weight != -1)) {
            throw std::invalid_argument("IsingSpinGlass: invalid coupling");
        }
    }
}

IsingSpinGlass IsingSpinGlass::generate(std::size_t side, std::uint64_t seed)
{
    if (side < 3) {
        throw std::invalid_argument("IsingSpinGlass: toroidal lattice needs side >= 3");
    }
    Rng rng(seed);
    std::vector<Coupling> couplings;
    for (std::size_t r = 0; r < side; ++r) {
        for (std::size_t c = 0; c < side; ++c) {
            const std::size_t i = r * side + c;
            const std::size_t right = r * side + (c + 1) % side;
            const std::size_t down = ((r + 1) % side) * side + c;
            couplings.push_back({i, right, rng.coin() ? 1 : -1});
            couplings.push_back({i, down, rng.coin() ? 1 : -1});
        }
    }
    return IsingSpinGlass(side, std::move(couplings));
}

double IsingSpinGlass::value(BitsView x) const
{
    if (x.size() != size()) {
        throw std::invalid_argument("IsingSpinGlass: length mismatch");
    }
    long total = 0;
    for (const auto& c : couplings_) {
        const int si = x[c.i] ? 1 : -1;
        const int sj = x[c.j] ? 1 : -1;
        total += c.weight * si * sj;
    }
    return static_cast<double>(total);
}

std::string IsingSpinGlass::name() const { return "ising-spin-glass"; }

std::optional<Vig> IsingSpinGlass::interaction_graph() const
{
    Vig g(size());
    for (const auto& c : couplings_) {
        g.add_edge(c.i, c.j);
    }
    return g;
}

IsingSpinGlass IsingSpinGlass::load(const std::filesystem::path& path)
{
    auto in = open_or_throw(path);
    TokenReader reader(in);
    const auto side = reader.read<std::size_t>("lattice side");
    if (side == 0) {
        throw ParseError("lattice side must be positive", reader.line(), reader.column());
    }
    std::vector<Coupling> couplings;
    std::string token;
    while (reader.next(token)) {
        std::size_t i = 0;
        try {
            i = std::stoul(token);
        } catch (const std::exception&) {
            throw ParseError("expected vertex index, got '" + token + "'", reader.line(), reader.column());
        }
        const auto j = reader.read<std::size_t>("vertex index");
        const auto w = reader.read<int>("coupling");
        if (i >= side * side || j >= side * side || i == j) {
            throw ParseError("vertex index out of range", reader.line(), reader.column());
        }
        if (w != 1 && w != -1) {
            throw ParseError("coupling must be -1 or +1", reader.line(), reader.column());
        }
        couplings.push_back({i, j, w});
    }
    return IsingSpinGlass(side, std::move(couplings));
}

void IsingSpinGlass::save(const std::filesystem::path& path) const
{
    std::ofstream out(path);
    out << side_ << '\n';
    for (const auto& c : couplings_) {
        out << c.i << ' ' << c.j << ' ' << c.weight << '\n';
    }
    if (!out) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

// ---------------------------------------------------------------------------
// MAX-3SAT

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line), column_(column)
{
}

MaxSat::MaxSat(std::size_t variables, std::vector<std::vector<int>> clauses, std::optional<double> optimum)
    : variables_(variables), clauses_(std::move(clauses)), optimum_(optimum)
{
    for (const auto& clause : clauses_) {
        if (clause.empty()) {
            throw std::invalid_argument("MaxSat: empty clause");
        }
        for (int lit : clause) {
            const auto v = static_cast<std::size_t>(std::abs(lit));
            if (lit == 0 || v > variables_) {
                throw std::invalid_argument("MaxSat: literal out of range");
            }
        }
    }
}

double MaxSat::value(BitsView x) const
{
    if (x.size() != variables_) {
        throw std::invalid_argument("MaxSat: length mismatch");
    }
    std::size_t satisfied = 0;
    for (const auto& clause : clauses_) {
        for (int lit : clause) {
            const auto v = static_cast<std::size_t>(std::abs(lit)) - 1;
            if ((lit > 0) == (x[v] != 0)) {
                ++satisfied;
                break;
            }
        }
    }
    return static_cast<double>(satisfied);
}

std::optional<Vig> MaxSat::interaction_graph() const
{
    Vig g(variables_);
    for (const auto& clause : clauses_) {
        std::vector<std::size_t> members;
        for (int lit : clause) {
            members.push_back(static_cast<std::size_t>(std::abs(lit)) - 1);
        }
        g.add_clique(members);
    }
    return g;
}

MaxSat MaxSat::parse_dimacs(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::size_t> variables;
    std::size_t declared_clauses = 0;
    std::vector<std::vector<int>> clauses;
    std::vector<int> current;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == 'c') {
            continue;
        }
        if (line[first] == '%') {
            break; // SATLIB terminator
        }
        if (line[first] == 'p') {
            std::istringstream ss(line.substr(first + 1));
            std::string fmt;
            long v = -1;
            long c = -1;
            ss >> fmt >> v >> c;
            if (fmt != "cnf" || !ss || v <= 0 || c < 0) {
                throw ParseError("malformed problem line", line_no, first + 1);
            }
            variables = static_cast<std::size_t>(v);
            declared_clauses = static_cast<std::size_t>(c);
            continue;
        }
        if (!variables) {
            throw ParseError("clause before problem line", line_no, first + 1);
        }
        std::size_t pos = first;
        while (pos < line.size()) {
            while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) {
                ++pos;
            }
            if (pos >= line.size()) {
                break;
            }
            const std::size_t start = pos;
            while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) {
                ++pos;
            }
            const std::string token = line.substr(start, pos - start);
            long lit = 0;
            try {
                std::size_t used = 0;
                lit = std::stol(token, &used);
                if (used != token.size()) {
                    throw std::invalid_argument(token);
                }
            } catch (const std::exception&) {
                throw ParseError("expected literal, got '" + token + "'", line_no, start + 1);
            }
            if (lit == 0) {
                if (current.empty()) {
                    throw ParseError("empty clause", line_no, start + 1);
                }
                clauses.push_back(std::move(current));
                current.clear();
            } else {
                if (static_cast<std::size_t>(std::labs(lit)) > *variables) {
                    throw ParseError("literal " + token + " exceeds variable count", line_no, start + 1);
                }
                current.push_back(static_cast<int>(lit));
            }
        }
    }
    if (!variables) {
        throw ParseError("missing problem line", line_no, 1);
    }
    if (!current.empty()) {
        clauses.push_back(std::move(current));
    }
    if (clauses.size() != declared_clauses) {
        throw ParseError("expected " + std::to_string(declared_clauses) + " clauses, found " +
                             std::to_string(clauses.size()),
                         line_no, 1);
    }
    return MaxSat(*variables, std::move(clauses));
}

MaxSat MaxSat::load_dimacs(const std::filesystem::path& path)
{
    auto in = open_or_throw(path);
    return parse_dimacs(in);
}

MaxSat MaxSat::generate_planted(std::size_t variables, double clause_ratio, std::uint64_t seed)
{
    if (variables < 3) {
        throw std::invalid_argument("MaxSat: need at least three variables");
    }
    Rng rng(seed);
    const Bits planted = rng.random_bits(variables);
    const auto count = static_cast<std::size_t>(std::llround(clause_ratio * static_cast<double>(variables)));
    std::vector<std::vector<int>> clauses;
    while (clauses.size() < count) {
        std::vector<int> clause;
        bool satisfied = false;
        while (clause.size() < 3) {
            const auto v = rng.below(variables);
            const bool taken = std::any_of(clause.begin(), clause.end(), [&](int lit) {
                return static_cast<std::uint64_t>(std::abs(lit)) == v + 1;
            });
            if (taken) {
                continue;
            }
            const bool positive = rng.coin();
            satisfied = satisfied || (positive == (planted[v] != 0));
            clause.push_back(positive ? static_cast<int>(v + 1) : -static_cast<int>(v + 1));
        }
        if (satisfied) {
            clauses.push_back(std::move(clause));
        }
    }
    const auto m = static_cast<double>(clauses.size());
    return MaxSat(variables, std::move(clauses), m);
}

void MaxSat::save_dimacs(const std::filesystem::path& path) const
{
    std::ofstream out(path);
    out << "p cnf " << variables_ << ' ' << clauses_.size() << '\n';
    for (const auto& clause : clauses_) {
        for (int lit : clause) {
            out << lit << ' ';
        }
        out << "0\n";
    }
    if (!out) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

// ---------------------------------------------------------------------------
// fixtures

namespace fixtures {

OverlapLayout overlapping_bimodal_layout()
{
    return OverlapLayout::custom(9, {{0, 1, 2, 3}, {3, 4, 5, 6}, {5, 6, 7, 8}});
}

std::shared_ptr<const Problem> overlapping_bimodal()
{
    return std::make_shared<BlockSumProblem>("overlapping-bimodal", overlapping_bimodal_layout(),
                                             BlockFunction{BlockFunction::Kind::bim, 4});
}

std::shared_ptr<const Problem> overlapping_bimodal_product()
{
    return std::make_shared<BlockProductProblem>("overlapping-bimodal-product", overlapping_bimodal_layout(),
                                                 BlockFunction{BlockFunction::Kind::bim, 4});
}

Vig overlapping_bimodal_vig() { return overlapping_bimodal_layout().interaction_graph(); }

std::shared_ptr<const Problem> onemax(std::size_t n)
{
    return std::make_shared<FunctionProblem>(
        "onemax", n, [](BitsView x) { return static_cast<double>(unitation(x)); }, static_cast<double>(n), Vig(n));
}

std::shared_ptr<const Problem> onemax_squared(std::size_t n)
{
    return std::make_shared<FunctionProblem>(
        "onemax-squared", n,
        [](BitsView x) {
            const auto u = static_cast<double>(unitation(x));
            return u * u;
        },
        static_cast<double>(n * n), Vig(n));
}

namespace {

OverlapLayout dec4_pair_layout() { return OverlapLayout::custom(8, {{0, 1, 2, 3}, {4, 5, 6, 7}}); }

} // namespace

std::shared_ptr<const Problem> dec4_pair()
{
    return std::make_shared<BlockSumProblem>("dec4-pair", dec4_pair_layout(),
                                             BlockFunction{BlockFunction::Kind::dec, 4});
}

double spiked_dec4_pair_value(BitsView x)
{
    static const Bits spike = parse_bits("0110 0000");
    if (x.size() != 8) {
        throw std::invalid_argument("spiked_dec4_pair: expects 8 variables");
    }
    if (std::equal(x.begin(), x.end(), spike.begin())) {
        return 5.5;
    }
    return evaluate_overlapping_sum(dec4_pair_layout(), BlockFunction{BlockFunction::Kind::dec, 4}, x);
}

std::shared_ptr<const Problem> spiked_dec4_pair()
{
    return std::make_shared<FunctionProblem>("spiked-dec4-pair", 8, spiked_dec4_pair_value, 8.0,
                                             dec4_pair_layout().interaction_graph());
}

std::shared_ptr<const Problem> dec_ring(std::size_t k)
{
    return std::make_shared<BlockSumProblem>("dec" + std::to_string(k) + "-ring", OverlapLayout::regular(k, 1, 3, true),
                                             BlockFunction{BlockFunction::Kind::dec, k});
}

} // namespace fixtures

} // namespace pxom
