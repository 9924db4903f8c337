#include "pxom/harness.hpp"

#include "pxom/problems.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace pxom {

namespace {

namespace pt = boost::property_tree;

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) {
            return parts;
        }
        start = pos + 1;
    }
}

template <class T>
T parse_number(const std::string& key, const std::string& text)
{
    T value{};
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw std::invalid_argument("config: bad value '" + text + "' for " + key);
    }
    return value;
}

bool parse_flag(const std::string& key, const std::string& text)
{
    if (text == "true" || text == "1" || text == "yes") return true;
    if (text == "false" || text == "0" || text == "no") return false;
    throw std::invalid_argument("config: bad boolean '" + text + "' for " + key);
}

template <class T>
std::vector<T> parse_list(const std::string& key, const std::string& text)
{
    std::vector<T> values;
    for (const auto& part : split(text, ',')) {
        if (!part.empty()) {
            values.push_back(parse_number<T>(key, part));
        }
    }
    return values;
}

template <class T>
std::string join(const std::vector<T>& values)
{
    std::ostringstream ss;
    for (std::size_t i = 0; i < values.size(); ++i) {
        ss << (i ? "," : "") << values[i];
    }
    return ss.str();
}

void set_key(ExperimentConfig& c, const std::string& key, const std::string& value)
{
    if (key == "problem.kind") c.kind = value;
    else if (key == "problem.n") c.n = parse_number<std::size_t>(key, value);
    else if (key == "problem.order") c.order = parse_number<std::size_t>(key, value);
    else if (key == "problem.overlap") c.overlap = parse_number<std::size_t>(key, value);
    else if (key == "problem.seed") c.instance_seed = parse_number<std::uint64_t>(key, value);
    else if (key == "problem.k") c.nk_k = parse_number<std::size_t>(key, value);
    else if (key == "problem.clause_ratio") c.clause_ratio = parse_number<double>(key, value);
    else if (key == "problem.instance") c.instance_path = value;
    else if (key == "problem.fixture") c.fixture = value;
    else if (key == "noise.size_percent") c.noise_percent = parse_number<double>(key, value);
    else if (key == "noise.level") c.noise_level = value;
    else if (key == "noise.modulus") c.noise_modulus = parse_number<unsigned>(key, value);
    else if (key == "noise.seed") c.noise_seed = parse_number<std::uint64_t>(key, value);
    else if (key == "optimizer.name") c.optimizer = value;
    else if (key == "optimizer.ffe_limit") c.ffe_limit = static_cast<std::uint64_t>(parse_number<double>(key, value));
    else if (key == "optimizer.pair_budget") c.pair_budget = parse_number<std::size_t>(key, value);
    else if (key == "run.seeds") c.seed_count = parse_number<std::size_t>(key, value);
    else if (key == "run.seed_list") c.seed_list = parse_list<std::uint64_t>(key, value);
    else if (key == "run.base_seed") c.base_seed = parse_number<std::uint64_t>(key, value);
    else if (key == "run.output") c.output = value;
    else if (key == "run.px_share") c.px_share = parse_flag(key, value);
    else if (key == "sweep.sizes") c.sweep_sizes = parse_list<std::size_t>(key, value);
    else if (key == "sweep.threshold") c.threshold = parse_number<double>(key, value);
    else throw std::invalid_argument("config: unknown key '" + key + "'");
}

void validate(const ExperimentConfig& c)
{
    parse_optimizer(c.optimizer);
    if (c.noise_percent < 0.0 || c.noise_percent > 100.0) {
        throw std::invalid_argument("config: noise.size_percent must be within [0, 100]");
    }
    if (c.noise_modulus < 1) {
        throw std::invalid_argument("config: noise.modulus must be at least 1");
    }
    if (c.threshold < 0.0 || c.threshold > 1.0) {
        throw std::invalid_argument("config: sweep.threshold must be within [0, 1]");
    }
    if (!std::is_sorted(c.sweep_sizes.begin(), c.sweep_sizes.end())) {
        throw std::invalid_argument("config: sweep.sizes must be ascending");
    }
}

} // namespace

std::vector<std::uint64_t> ExperimentConfig::seeds() const
{
    if (!seed_list.empty()) {
        return seed_list;
    }
    std::vector<std::uint64_t> out(seed_count);
    for (std::size_t i = 0; i < seed_count; ++i) {
        out[i] = base_seed + i;
    }
    return out;
}

ExperimentConfig ExperimentConfig::parse(std::istream& in)
{
    pt::ptree tree;
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
    ExperimentConfig c;
    for (const auto& [section, body] : tree) {
        if (body.empty()) {
            throw std::invalid_argument("config: key '" + section + "' outside a section");
        }
        for (const auto& [key, value] : body) {
            set_key(c, section + "." + key, trim(value.data()));
        }
    }
    validate(c);
    return c;
}

ExperimentConfig ExperimentConfig::load(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config " + path.string());
    }
    return parse(in);
}

void ExperimentConfig::apply(std::string_view assignment)
{
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos) {
        throw std::invalid_argument("override '" + std::string(assignment) + "' is not section.key=value");
    }
    set_key(*this, trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
    validate(*this);
}

void ExperimentConfig::write(std::ostream& out) const
{
    out << std::setprecision(17);
    out << "[problem]\nkind = " << kind << "\nn = " << n << "\norder = " << order << "\noverlap = " << overlap
        << "\nseed = " << instance_seed << "\nk = " << nk_k << "\nclause_ratio = " << clause_ratio << '\n';
    if (!instance_path.empty()) out << "instance = " << instance_path << '\n';
    if (!fixture.empty()) out << "fixture = " << fixture << '\n';
    out << "\n[noise]\nsize_percent = " << noise_percent << "\nlevel = " << noise_level
        << "\nmodulus = " << noise_modulus << "\nseed = " << noise_seed << '\n';
    out << "\n[optimizer]\nname = " << optimizer << "\nffe_limit = " << ffe_limit << "\npair_budget = " << pair_budget
        << '\n';
    out << "\n[run]\nseeds = " << seed_count << "\nbase_seed = " << base_seed
        << "\npx_share = " << (px_share ? "true" : "false") << '\n';
    if (!seed_list.empty()) out << "seed_list = " << join(seed_list) << '\n';
    if (!output.empty()) out << "output = " << output << '\n';
    out << "\n[sweep]\nthreshold = " << threshold << '\n';
    if (!sweep_sizes.empty()) out << "sizes = " << join(sweep_sizes) << '\n';
}

namespace {

std::string block_name(const char* family, std::size_t order, std::size_t overlap, bool cyclic)
{
    std::ostringstream ss;
    ss << (cyclic ? "c" : "") << family << order;
    if (overlap > 0) ss << 'o' << overlap;
    return ss.str();
}

std::shared_ptr<const Problem> make_fixture(const std::string& name)
{
    if (name == "overlapping-bimodal") return fixtures::overlapping_bimodal();
    if (name == "overlapping-bimodal-product") return fixtures::overlapping_bimodal_product();
    if (name == "dec4-pair") return fixtures::dec4_pair();
    if (name == "spiked-dec4-pair") return fixtures::spiked_dec4_pair();
    if (name == "dec3-ring") return fixtures::dec_ring(3);
    if (name == "dec4-ring") return fixtures::dec_ring(4);
    throw std::invalid_argument("unknown fixture '" + name + "'");
}

std::shared_ptr<const Problem> make_inner(const ExperimentConfig& c, std::size_t n)
{
    const auto& kind = c.kind;
    if (kind == "trap-concat" || kind == "cyclic-trap" || kind == "bimodal-concat" || kind == "bimodal-cyclic") {
        const bool cyclic = kind == "cyclic-trap" || kind == "bimodal-cyclic";
        const bool bimodal = kind.starts_with("bimodal");
        const auto blocks = OverlapLayout::blocks_for_size(n, c.order, c.overlap, cyclic);
        BlockFunction base{bimodal ? BlockFunction::Kind::bim : BlockFunction::Kind::dec, c.order};
        return std::make_shared<BlockSumProblem>(block_name(bimodal ? "bim" : "dec", c.order, c.overlap, cyclic),
                                                 OverlapLayout::regular(c.order, c.overlap, blocks, cyclic), base);
    }
    if (kind == "onemax") {
        return fixtures::onemax(n);
    }
    if (kind == "nk-landscape") {
        if (!c.instance_path.empty()) return std::make_shared<NkLandscape>(NkLandscape::load(c.instance_path));
        return std::make_shared<NkLandscape>(NkLandscape::generate(n, c.nk_k, c.instance_seed));
    }
    if (kind == "ising-spin-glass") {
        if (!c.instance_path.empty()) return std::make_shared<IsingSpinGlass>(IsingSpinGlass::load(c.instance_path));
        std::size_t side = 0;
        while ((side + 1) * (side + 1) <= n) ++side;
        if (side * side != n) {
            throw std::invalid_argument("ising-spin-glass: n = " + std::to_string(n) + " is not a square");
        }
        return std::make_shared<IsingSpinGlass>(IsingSpinGlass::generate(side, c.instance_seed));
    }
    if (kind == "max3sat") {
        if (!c.instance_path.empty()) return std::make_shared<MaxSat>(MaxSat::load_dimacs(c.instance_path));
        return std::make_shared<MaxSat>(MaxSat::generate_planted(n, c.clause_ratio, c.instance_seed));
    }
    if (kind == "example-fixture") {
        return make_fixture(c.fixture);
    }
    throw std::invalid_argument("unknown problem kind '" + kind + "'");
}

} // namespace

std::shared_ptr<const Problem> make_problem(const ExperimentConfig& config, std::optional<std::size_t> size)
{
    if (!config.instance_path.empty() && !std::filesystem::exists(config.instance_path)) {
        throw std::runtime_error("instance file not found: " + config.instance_path);
    }
    auto inner = make_inner(config, size.value_or(config.n));
    if (config.noise_percent <= 0.0) {
        return inner;
    }
    NoiseConfig noise;
    noise.noise_vars = draw_noise_vars(inner->size(), config.noise_percent, config.noise_seed);
    noise.modulus = config.noise_modulus;
    noise.seed = config.noise_seed;
    if (config.noise_level == "random-mean") {
        noise.level = default_noise_level(*inner, NoiseLevelRule::random_mean);
    } else if (config.noise_level == "midpoint") {
        noise.level = default_noise_level(*inner, NoiseLevelRule::optimum_attractor_midpoint);
    } else {
        noise.level = parse_number<double>("noise.level", config.noise_level);
    }
    return std::make_shared<NoisedProblem>(std::move(inner), std::move(noise));
}

Mask exchanged_genes(const MaskApplication& application)
{
    Mask genes;
    for (auto i : application.mask) {
        if (application.source[i] != application.donor[i]) {
            genes.push_back(i);
        }
    }
    return genes;
}

void PxShareCounter::observe(const MaskApplication& application)
{
    ++total_;
    const auto genes = exchanged_genes(application);
    const auto components = px_masks(vig_, application.source, application.donor);
    if (std::find(components.begin(), components.end(), genes) != components.end()) {
        ++px_;
    }
}

std::optional<double> PxShareCounter::share() const
{
    if (total_ == 0) {
        return std::nullopt;
    }
    return 100.0 * static_cast<double>(px_) / static_cast<double>(total_);
}

RunRecord run_single(const Problem& problem, const ExperimentConfig& config, std::uint64_t seed)
{
    const auto started = std::chrono::steady_clock::now();
    RunRecord record;
    record.problem = problem.name();
    record.n = problem.size();
    record.optimizer = config.optimizer;
    record.noise_percent = config.noise_percent;
    record.seed = seed;

    Evaluator ev(problem, config.ffe_limit);
    OptimizerOptions options;
    options.linkage_learning.pair_budget = config.pair_budget;
    std::optional<PxShareCounter> counter;
    std::uint64_t masks = 0;
    if (auto vig = problem.interaction_graph(); vig && config.px_share) {
        counter.emplace(std::move(*vig));
    }
    options.observer = [&](const MaskApplication& application) {
        ++masks;
        if (counter) {
            counter->observe(application);
        }
    };
    optimize(parse_optimizer(config.optimizer), ev, Rng(seed), std::move(options));

    record.success = ev.solved();
    record.ffe_at_success = ev.ffe_at_optimum();
    record.ffe_used = ev.used();
    record.best_fitness = ev.best_fitness().value_or(0.0);
    record.masks = masks;
    if (counter) {
        record.px_share = counter->share();
    }
    record.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return record;
}

std::size_t worker_count()
{
    if (const char* env = std::getenv("PXOM_WORKERS")) {
        const std::string text = env;
        const auto value = parse_number<std::size_t>("PXOM_WORKERS", text);
        if (value == 0) {
            throw std::invalid_argument("PXOM_WORKERS must be positive");
        }
        return value;
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<RunRecord> run(const ExperimentConfig& config, const Problem& problem)
{
    const auto seeds = config.seeds();
    std::vector<RunRecord> records(seeds.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    auto work = [&] {
        for (std::size_t i = next++; i < seeds.size(); i = next++) {
            try {
                records[i] = run_single(problem, config, seeds[i]);
            } catch (...) {
                std::lock_guard lock(failure_lock);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(seeds.size(), 1));
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) {
        pool.emplace_back(work);
    }
    work();
    for (auto& t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return records;
}

std::vector<RunRecord> run(const ExperimentConfig& config)
{
    const auto problem = make_problem(config);
    return run(config, *problem);
}

void write_csv_header(std::ostream& out)
{
    out << "problem,n,optimizer,noise_percent,seed,success,ffe_success,ffe_used,best_fitness,px_share,masks\n";
}

void write_csv(std::ostream& out, const std::vector<RunRecord>& records)
{
    out << std::fixed;
    for (const auto& r : records) {
        out << r.problem << ',' << r.n << ',' << r.optimizer << ',' << std::setprecision(1) << r.noise_percent << ','
            << r.seed << ',' << (r.success ? 1 : 0) << ',';
        if (r.ffe_at_success) out << *r.ffe_at_success;
        out << ',' << r.ffe_used << ',' << std::setprecision(6) << r.best_fitness << ',';
        if (r.px_share) out << std::setprecision(4) << *r.px_share;
        out << ',' << r.masks << '\n';
    }
    out << std::defaultfloat;
}

std::vector<RunRecord> read_csv(std::istream& in)
{
    std::vector<RunRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line.starts_with("problem,")) {
            continue;
        }
        const auto f = split(line, ',');
        if (f.size() != 11) {
            throw std::invalid_argument("csv line " + std::to_string(line_no) + ": expected 11 fields");
        }
        RunRecord r;
        r.problem = f[0];
        r.n = parse_number<std::size_t>("n", f[1]);
        r.optimizer = f[2];
        r.noise_percent = parse_number<double>("noise_percent", f[3]);
        r.seed = parse_number<std::uint64_t>("seed", f[4]);
        r.success = f[5] == "1";
        if (!f[6].empty()) r.ffe_at_success = parse_number<std::uint64_t>("ffe_success", f[6]);
        r.ffe_used = parse_number<std::uint64_t>("ffe_used", f[7]);
        r.best_fitness = parse_number<double>("best_fitness", f[8]);
        if (!f[9].empty()) r.px_share = parse_number<double>("px_share", f[9]);
        r.masks = parse_number<std::uint64_t>("masks", f[10]);
        records.push_back(std::move(r));
    }
    return records;
}

std::optional<double> median(std::vector<double> values)
{
    if (values.empty()) {
        return std::nullopt;
    }
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

namespace {

SizeResult summarize_size(std::size_t n, std::vector<RunRecord> records)
{
    SizeResult result;
    result.n = n;
    std::vector<double> ffe;
    std::size_t ok = 0;
    for (const auto& r : records) {
        if (r.success) {
            ++ok;
            ffe.push_back(static_cast<double>(*r.ffe_at_success));
        }
    }
    result.success_rate = records.empty() ? 0.0 : static_cast<double>(ok) / static_cast<double>(records.size());
    result.median_ffe = median(ffe);
    result.records = std::move(records);
    return result;
}

} // namespace

SweepReport sweep(const ExperimentConfig& config, const std::vector<std::size_t>& sizes, double threshold)
{
    if (!std::is_sorted(sizes.begin(), sizes.end())) {
        throw std::invalid_argument("sweep: sizes must be ascending");
    }
    // build every instance first so a bad size fails before any run
    std::vector<std::shared_ptr<const Problem>> problems;
    for (auto n : sizes) {
        problems.push_back(make_problem(config, n));
    }
    SweepReport report;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        auto result = summarize_size(problems[i]->size(), run(config, *problems[i]));
        if (result.success_rate + 1e-12 >= threshold) {
            report.largest_passing = result.n;
        }
        report.sizes.push_back(std::move(result));
    }
    return report;
}

namespace {

struct GroupKey {
    std::string problem;
    std::string optimizer;
    double noise;
    auto operator<=>(const GroupKey&) const = default;
};

} // namespace

void summarize(std::ostream& out, const std::vector<RunRecord>& records)
{
    std::map<std::pair<GroupKey, std::size_t>, std::vector<RunRecord>> groups;
    for (const auto& r : records) {
        groups[{GroupKey{r.problem, r.optimizer, r.noise_percent}, r.n}].push_back(r);
    }
    out << "problem,n,optimizer,noise_percent,runs,success_percent,median_ffe,median_px_share\n" << std::fixed;
    for (const auto& [key, group] : groups) {
        const auto result = summarize_size(key.second, group);
        std::vector<double> shares;
        for (const auto& r : group) {
            if (r.px_share) shares.push_back(*r.px_share);
        }
        const auto share = median(shares);
        out << key.first.problem << ',' << key.second << ',' << key.first.optimizer << ',' << std::setprecision(1)
            << key.first.noise << ',' << group.size() << ',' << std::setprecision(2) << 100.0 * result.success_rate
            << ',';
        if (result.median_ffe) out << std::setprecision(1) << *result.median_ffe;
        out << ',';
        if (share) out << std::setprecision(2) << *share;
        out << '\n';
    }
    out << std::defaultfloat;
}

void summarize_scalability(std::ostream& out, const std::vector<RunRecord>& records, double threshold)
{
    std::map<GroupKey, std::map<std::size_t, std::vector<RunRecord>>> groups;
    for (const auto& r : records) {
        groups[GroupKey{r.problem, r.optimizer, r.noise_percent}][r.n].push_back(r);
    }
    out << "problem,optimizer,noise_percent,largest_passing_n\n" << std::fixed;
    for (const auto& [key, by_size] : groups) {
        std::optional<std::size_t> largest;
        for (const auto& [n, group] : by_size) {
            if (summarize_size(n, group).success_rate + 1e-12 >= threshold) {
                largest = n;
            }
        }
        out << key.problem << ',' << key.optimizer << ',' << std::setprecision(1) << key.noise << ',';
        if (largest) out << *largest;
        out << '\n';
    }
    out << std::defaultfloat;
}

} // namespace pxom
