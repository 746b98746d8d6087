// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 primrrt authors

#include "primrrt/primitives.hpp"

#include <array>
#include <charconv>
#include <numeric>
#include <sstream>

#include "primrrt/errors.hpp"

namespace primrrt {

namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

std::string degree_text(double radians) {
    std::ostringstream os;
    os << std::round(std::abs(radians) * 180.0 / kPi * 1e6) / 1e6;
    return os.str();
}

std::string default_label(const PrimitiveKind& kind) {
    if (std::holds_alternative<Straight>(kind)) {
        return "forward";
    }
    const double dtheta = turn_angle(kind);
    const std::string side = dtheta > 0.0 ? "left" : "right";
    const std::string prefix = std::holds_alternative<ArcTurn>(kind) ? "arc_" : "turn_";
    return prefix + side + "_" + degree_text(dtheta);
}

// Straight first, then each listed angle as a left/right pair.
PrimitiveSet car_set(std::string name, double forward,
                     std::initializer_list<std::pair<int, double>> turns) {
    std::vector<MotionPrimitive> prims;
    prims.push_back(MotionPrimitive::make(0, "forward", Straight{forward}));
    for (const auto& [degrees, radius] : turns) {
        const double dtheta = degrees_to_radians(degrees);
        for (const double sign : {1.0, -1.0}) {
            const ArcTurn arc{sign * dtheta, radius};
            prims.push_back(MotionPrimitive::make(0, default_label(arc), arc));
        }
    }
    return {std::move(name), std::move(prims)};
}

// signed_degrees lists each rotation explicitly (positive = left).
PrimitiveSet turtle_set(std::string name, double forward, std::initializer_list<int> signed_degrees) {
    std::vector<MotionPrimitive> prims;
    prims.push_back(MotionPrimitive::make(0, "forward", Straight{forward}));
    for (const int degrees : signed_degrees) {
        const TurnThenStraight turn{degrees_to_radians(degrees), forward};
        prims.push_back(MotionPrimitive::make(0, default_label(turn), turn));
    }
    return {std::move(name), std::move(prims)};
}

constexpr std::array<std::string_view, 8> kBuiltinNames = {
    "car1", "car2", "car3", "car4", "turtle1", "turtle2", "turtle3", "fig1"};

std::string joined_builtin_names() {
    std::string out;
    for (const auto name : kBuiltinNames) {
        if (!out.empty()) out += ", ";
        out += name;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_words(std::string_view s) {
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        const std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
        if (i > start) words.push_back(s.substr(start, i - start));
    }
    return words;
}

double parse_number(std::string_view word, std::size_t line) {
    double value = 0.0;
    const auto* first = word.data();
    const auto* last = word.data() + word.size();
    if (!word.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
        throw ParseError(line, "expected a number, got '" + std::string(word) + "'");
    }
    return value;
}

}  // namespace

void validate(const PrimitiveKind& kind) {
    std::visit(
        [](const auto& k) {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, Straight>) {
                if (!positive_finite(k.length)) {
                    throw InvalidArgument("straight primitive needs a positive length");
                }
            } else if constexpr (std::is_same_v<K, ArcTurn>) {
                if (!positive_finite(k.radius)) {
                    throw InvalidArgument("arc primitive needs a positive radius");
                }
                if (!std::isfinite(k.dtheta) || k.dtheta == 0.0 || std::abs(k.dtheta) > kPi) {
                    throw InvalidArgument("arc primitive needs 0 < |dtheta| <= pi");
                }
            } else {
                if (!positive_finite(k.length)) {
                    throw InvalidArgument("turn primitive needs a positive length");
                }
                if (!std::isfinite(k.dtheta) || std::abs(k.dtheta) > kPi) {
                    throw InvalidArgument("turn primitive needs |dtheta| <= pi");
                }
            }
        },
        kind);
}

RelativePose endpoint(const PrimitiveKind& kind) {
    validate(kind);
    if (const auto* s = std::get_if<Straight>(&kind)) {
        return {s->length, 0.0, 0.0};
    }
    if (const auto* a = std::get_if<ArcTurn>(&kind)) {
        // 1 - cos(d) written as 2 sin^2(d/2) to keep small turns accurate.
        const double sweep = std::abs(a->dtheta);
        const double half = std::sin(0.5 * sweep);
        const double lateral = 2.0 * a->radius * half * half;
        return {a->radius * std::sin(sweep), a->dtheta > 0.0 ? lateral : -lateral,
                normalize_angle(a->dtheta)};
    }
    const auto& t = std::get<TurnThenStraight>(kind);
    return {t.length * std::cos(t.dtheta), t.length * std::sin(t.dtheta), normalize_angle(t.dtheta)};
}

double arc_length(const PrimitiveKind& kind) {
    validate(kind);
    if (const auto* s = std::get_if<Straight>(&kind)) return s->length;
    if (const auto* a = std::get_if<ArcTurn>(&kind)) return a->radius * std::abs(a->dtheta);
    return std::get<TurnThenStraight>(kind).length;
}

double turn_angle(const PrimitiveKind& kind) noexcept {
    if (const auto* a = std::get_if<ArcTurn>(&kind)) return a->dtheta;
    if (const auto* t = std::get_if<TurnThenStraight>(&kind)) return t->dtheta;
    return 0.0;
}

double degrees_to_radians(double degrees) noexcept {
    if (std::isfinite(degrees) && degrees == std::trunc(degrees) && std::abs(degrees) < 1e9) {
        const auto whole = static_cast<long long>(degrees);
        const long long g = std::gcd(whole, 180LL);
        if (g != 0) {
            return kPi * static_cast<double>(whole / g) / static_cast<double>(180LL / g);
        }
    }
    return kPi * degrees / 180.0;
}

MotionPrimitive MotionPrimitive::make(int id, std::string label, const PrimitiveKind& kind) {
    return {id, std::move(label), kind, endpoint(kind), primrrt::arc_length(kind)};
}

namespace detail {

std::size_t interval_count(double arc_length, double resolution) noexcept {
    // Shave a relative 1e-12 so that e.g. 1.0 / 0.05 does not round up to 21.
    const double ratio = arc_length / resolution * (1.0 - 1e-12);
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(ratio)));
}

}  // namespace detail

std::vector<RelativePose> discretize(const MotionPrimitive& prim, double resolution) {
    if (!positive_finite(resolution)) {
        throw InvalidArgument("discretize: resolution must be positive");
    }
    std::vector<RelativePose> samples;
    samples.reserve(detail::interval_count(prim.arc_length, resolution) + 1);
    for_each_sample(prim, resolution, [&](const RelativePose& s) {
        samples.push_back(s);
        return true;
    });
    return samples;
}

PrimitiveSet::PrimitiveSet(std::string name, std::vector<MotionPrimitive> primitives)
    : name_(std::move(name)), primitives_(std::move(primitives)) {
    if (primitives_.empty()) {
        throw ValidationError("primitive set '" + name_ + "' is empty");
    }
    for (std::size_t i = 0; i < primitives_.size(); ++i) {
        primitives_[i].id = static_cast<int>(i);
    }
}

const MotionPrimitive& PrimitiveSet::at(int id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= primitives_.size()) {
        throw StateError("primitive id " + std::to_string(id) + " not in set '" + name_ + "'");
    }
    return primitives_[static_cast<std::size_t>(id)];
}

std::span<const std::string_view> builtin_set_names() noexcept { return kBuiltinNames; }

PrimitiveSet builtin_set(std::string_view name, double forward_length) {
    if (!positive_finite(forward_length)) {
        throw InvalidArgument("forward length must be positive");
    }
    const std::string n(name);
    if (name == "car1") return car_set(n, forward_length, {{45, 1.0}});
    if (name == "car2") return car_set(n, forward_length, {{90, 0.5}});
    if (name == "car3") return car_set(n, forward_length, {{30, 1.8}, {60, 1.0}});
    if (name == "car4") return car_set(n, forward_length, {{180, 0.5}});
    if (name == "turtle1") return turtle_set(n, forward_length, {10, -10, 20, -20, 30, -30});
    if (name == "turtle2") return turtle_set(n, forward_length, {15, -15, 30, -30, 45, -45, 60, -60});
    if (name == "turtle3") return turtle_set(n, forward_length, {90, 180, -90});
    if (name == "fig1") return car_set(n, forward_length, {{30, 2.0}});
    throw NotFound("unknown primitive set '" + n + "'; valid names: " + joined_builtin_names());
}

PrimitiveSet load_set(std::string_view text) {
    std::string name = "custom";
    bool seen_primitive = false;
    std::vector<MotionPrimitive> prims;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;

        const auto words = split_words(line);
        const auto keyword = words.front();
        const auto expect_args = [&](std::size_t n) {
            if (words.size() != n + 1) {
                throw ParseError(line_no, "'" + std::string(keyword) + "' takes " + std::to_string(n) +
                                              " argument(s)");
            }
        };
        try {
            if (keyword == "name") {
                if (seen_primitive) throw ParseError(line_no, "'name' must precede all primitives");
                name = std::string(trim(line.substr(4)));
                if (name.empty()) throw ParseError(line_no, "'name' needs a value");
            } else if (keyword == "straight") {
                expect_args(1);
                const Straight s{parse_number(words[1], line_no)};
                prims.push_back(MotionPrimitive::make(0, default_label(s), s));
                seen_primitive = true;
            } else if (keyword == "arc") {
                expect_args(2);
                const ArcTurn a{degrees_to_radians(parse_number(words[1], line_no)),
                                parse_number(words[2], line_no)};
                prims.push_back(MotionPrimitive::make(0, default_label(a), a));
                seen_primitive = true;
            } else if (keyword == "turn") {
                expect_args(2);
                const TurnThenStraight t{degrees_to_radians(parse_number(words[1], line_no)),
                                         parse_number(words[2], line_no)};
                prims.push_back(MotionPrimitive::make(0, default_label(t), t));
                seen_primitive = true;
            } else {
                throw ParseError(line_no, "unknown keyword '" + std::string(keyword) + "'");
            }
        } catch (const InvalidArgument& e) {
            throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return {std::move(name), std::move(prims)};
}

}  // namespace primrrt
