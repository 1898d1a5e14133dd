#include "domcount/conditions.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace domcount {

int ColorMultiset::size() const { return std::accumulate(counts.begin(), counts.end(), 0); }

int ColorMultiset::distinct() const {
    int d = 0;
    for (int c : counts) d += c > 0 ? 1 : 0;
    return d;
}

ColoringCondition ColoringCondition::dominating() { return at_least_count(2, 1, 1); }

ColoringCondition ColoringCondition::proper(int q) {
    if (q < 1) throw std::invalid_argument("proper condition needs q >= 1");
    return ColoringCondition(Kind::proper, q);
}

ColoringCondition ColoringCondition::rainbow(int q) {
    if (q < 1) throw std::invalid_argument("rainbow condition needs q >= 1");
    return ColoringCondition(Kind::rainbow, q);
}

ColoringCondition ColoringCondition::at_least_count(int k, int color, int min_count) {
    if (k < 1) throw std::invalid_argument("condition needs at least one color");
    if (color < 0 || color >= k) throw std::invalid_argument("required color out of range");
    if (min_count < 1) throw std::invalid_argument("minimum count must be >= 1");
    ColoringCondition c(k == 2 && color == 1 && min_count == 1 ? Kind::dominating
                                                               : Kind::at_least_count,
                        k);
    c.color_ = color;
    c.min_count_ = min_count;
    return c;
}

ColoringCondition ColoringCondition::explicit_list(
    int k, std::map<int, std::set<std::vector<int>>> per_size) {
    if (k < 1) throw std::invalid_argument("condition needs at least one color");
    for (const auto& [size, vectors] : per_size) {
        if (size < 0) throw std::invalid_argument("multiset size must be nonnegative");
        for (const auto& v : vectors) {
            if (static_cast<int>(v.size()) != k)
                throw std::invalid_argument("count vector length must equal the color count");
            int total = 0;
            for (int c : v) {
                if (c < 0) throw std::invalid_argument("counts must be nonnegative");
                total += c;
            }
            if (total != size)
                throw std::invalid_argument("count vector sums to " + std::to_string(total) +
                                            " but is listed under size " + std::to_string(size));
        }
    }
    ColoringCondition c(Kind::explicit_list, k);
    c.allowed_ = std::move(per_size);
    return c;
}

ColoringCondition ColoringCondition::projected(std::shared_ptr<const ColoringCondition> base,
                                               std::vector<int> projection) {
    if (!base) throw std::invalid_argument("projected condition needs a base");
    for (int c : projection)
        if (c < 0 || c >= base->colors())
            throw std::invalid_argument("projection target out of range");
    ColoringCondition c(Kind::projected, static_cast<int>(projection.size()));
    c.base_ = std::move(base);
    c.projection_ = std::move(projection);
    return c;
}

ColoringCondition ColoringCondition::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open condition file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("condition file " + path + ": " + e.what());
    }
    if (!j.contains("colors") || !j["colors"].is_number_integer())
        throw std::invalid_argument("condition file needs an integer \"colors\" field");
    int k = j["colors"].get<int>();
    std::map<int, std::set<std::vector<int>>> per_size;
    if (j.contains("sizes")) {
        for (const auto& [key, list] : j["sizes"].items()) {
            int size = 0;
            try {
                size = std::stoi(key);
            } catch (const std::exception&) {
                throw std::invalid_argument("condition file: bad size key \"" + key + "\"");
            }
            for (const auto& vec : list) per_size[size].insert(vec.get<std::vector<int>>());
        }
    }
    return explicit_list(k, std::move(per_size));
}

bool ColoringCondition::allows(const ColorMultiset& m) const {
    if (m.colors() != k_)
        throw std::invalid_argument("multiset has " + std::to_string(m.colors()) +
                                    " colors, condition expects " + std::to_string(k_));
    switch (kind_) {
        case Kind::dominating:
        case Kind::at_least_count:
            return m.counts[static_cast<size_t>(color_)] >= min_count_;
        case Kind::proper:
            return m.distinct() >= 2;
        case Kind::rainbow:
            for (int c : m.counts)
                if (c > 1) return false;
            return true;
        case Kind::explicit_list: {
            auto it = allowed_.find(m.size());
            return it != allowed_.end() && it->second.count(m.counts) > 0;
        }
        case Kind::projected: {
            ColorMultiset base;
            base.counts.assign(static_cast<size_t>(base_->colors()), 0);
            for (int c = 0; c < k_; ++c)
                base.counts[static_cast<size_t>(projection_[static_cast<size_t>(c)])] +=
                    m.counts[static_cast<size_t>(c)];
            return base_->allows(base);
        }
    }
    throw std::logic_error("unreachable condition kind");
}

std::string ColoringCondition::describe() const {
    switch (kind_) {
        case Kind::dominating:
            return "dominating";
        case Kind::proper:
            return "proper:" + std::to_string(k_);
        case Kind::rainbow:
            return "rainbow:" + std::to_string(k_);
        case Kind::at_least_count:
            return "at-least-count:" + std::to_string(k_) + ":" + std::to_string(color_) + ":" +
                   std::to_string(min_count_);
        case Kind::explicit_list:
            return "explicit-list:" + std::to_string(k_);
        case Kind::projected:
            return "blowup(" + base_->describe() + ")";
    }
    return "?";
}

Activation Activation::uniform(int k) {
    Activation a;
    a.weights.assign(static_cast<size_t>(k), BigRational(1));
    return a;
}

Activation Activation::parse(const std::string& csv) {
    Activation a;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) a.weights.push_back(parse_rational(tok));
    a.validate();
    return a;
}

bool Activation::all_integral() const {
    for (const auto& w : weights)
        if (boost::multiprecision::denominator(w) != 1) return false;
    return true;
}

void Activation::validate() const {
    if (weights.empty()) throw std::invalid_argument("activation needs at least one color");
    for (const auto& w : weights)
        if (w <= 0) throw std::invalid_argument("activation weights must be positive");
}

BigCount multinomial(int size, const ColorMultiset& counts) {
    if (counts.size() != size)
        throw std::invalid_argument("multiset of size " + std::to_string(counts.size()) +
                                    " does not match domain size " + std::to_string(size));
    BigCount result = 1;
    int placed = 0;
    for (int c : counts.counts) {
        // multiply by C(placed + c, c)
        for (int i = 1; i <= c; ++i) {
            result *= placed + i;
            result /= i;
        }
        placed += c;
    }
    return result;
}

namespace {

// Enumerates count vectors of total `size` over k colors.
template <typename Fn>
void for_each_multiset(int k, int size, std::vector<int>& counts, int color, int remaining,
                       Fn&& fn) {
    if (color == k - 1) {
        counts[static_cast<size_t>(color)] = remaining;
        fn(counts);
        return;
    }
    for (int c = 0; c <= remaining; ++c) {
        counts[static_cast<size_t>(color)] = c;
        for_each_multiset(k, size, counts, color + 1, remaining - c, fn);
    }
}

}  // namespace

BigCount legal_function_count(int r, int k, const ColoringCondition& condition) {
    if (r < 0) throw std::invalid_argument("domain size must be nonnegative");
    if (k != condition.colors())
        throw std::invalid_argument("color count does not match the condition");
    BigCount total = 0;
    ColorMultiset m;
    m.counts.assign(static_cast<size_t>(k), 0);
    for_each_multiset(k, r, m.counts, 0, r, [&](const std::vector<int>&) {
        if (condition.allows(m)) total += multinomial(r, m);
    });
    return total;
}

BigRational weighted_legal_function_count(int r, const ColoringCondition& condition,
                                          const Activation& lambda) {
    if (r < 0) throw std::invalid_argument("domain size must be nonnegative");
    lambda.validate();
    if (lambda.colors() != condition.colors())
        throw std::invalid_argument("activation color count does not match the condition");
    BigRational total = 0;
    ColorMultiset m;
    m.counts.assign(static_cast<size_t>(lambda.colors()), 0);
    for_each_multiset(lambda.colors(), r, m.counts, 0, r, [&](const std::vector<int>&) {
        if (!condition.allows(m)) return;
        BigRational weight(multinomial(r, m));
        for (int c = 0; c < m.colors(); ++c)
            weight *= pow_rational(lambda.weights[static_cast<size_t>(c)],
                                   m.counts[static_cast<size_t>(c)]);
        total += weight;
    });
    return total;
}

BlowupResult blowup(const ColoringCondition& condition, const Activation& lambda) {
    lambda.validate();
    if (!lambda.all_integral())
        throw std::invalid_argument("blow-up needs integer activation weights");
    if (lambda.colors() != condition.colors())
        throw std::invalid_argument("activation color count does not match the condition");
    std::vector<int> projection;
    for (int x = 0; x < lambda.colors(); ++x) {
        auto copies = boost::multiprecision::numerator(lambda.weights[static_cast<size_t>(x)])
                          .convert_to<long long>();
        for (long long i = 0; i < copies; ++i) projection.push_back(x);
    }
    auto base = std::make_shared<const ColoringCondition>(condition);
    BlowupResult result{static_cast<int>(projection.size()),
                        ColoringCondition::projected(base, projection), projection};
    return result;
}

}  // namespace domcount
