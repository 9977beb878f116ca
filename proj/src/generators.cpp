#include "driftstream/generators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace driftstream {

namespace {

Schema make_sea_schema() {
  Schema s;
  s.attributes = {{"att1", {}}, {"att2", {}}, {"att3", {}}};
  s.class_values = {"groupA", "groupB"};
  return s;
}

Schema make_stagger_schema() {
  Schema s;
  s.attributes = {{"size", {"small", "medium", "large"}},
                  {"color", {"red", "green", "blue"}},
                  {"shape", {"circle", "square", "triangle"}}};
  s.class_values = {"negative", "positive"};
  return s;
}

Schema make_led_schema() {
  Schema s;
  s.attributes.reserve(24);
  for (int i = 0; i < 24; ++i) {
    s.attributes.push_back({"att" + std::to_string(i), {"0", "1"}});
  }
  for (int d = 0; d < 10; ++d) s.class_values.push_back(std::to_string(d));
  return s;
}

Schema make_agrawal_schema() {
  Schema s;
  s.attributes.push_back({"salary", {}});
  s.attributes.push_back({"commission", {}});
  s.attributes.push_back({"age", {}});
  AttributeSpec elevel{"elevel", {}};
  for (int i = 0; i < 5; ++i) elevel.values.push_back("level" + std::to_string(i));
  s.attributes.push_back(std::move(elevel));
  AttributeSpec car{"car", {}};
  for (int i = 1; i <= 20; ++i) car.values.push_back("car" + std::to_string(i));
  s.attributes.push_back(std::move(car));
  AttributeSpec zip{"zipcode", {}};
  for (int i = 0; i < 9; ++i) zip.values.push_back("zip" + std::to_string(i));
  s.attributes.push_back(std::move(zip));
  s.attributes.push_back({"hvalue", {}});
  s.attributes.push_back({"hyears", {}});
  s.attributes.push_back({"loan", {}});
  s.class_values = {"groupA", "groupB"};
  return s;
}

Schema make_hyperplane_schema() {
  Schema s;
  s.attributes.reserve(10);
  for (int i = 0; i < 10; ++i) s.attributes.push_back({"att" + std::to_string(i), {}});
  s.class_values = {"negative", "positive"};
  return s;
}

Instance generate_sea(int concept_id, Rng& rng) {
  Instance inst;
  inst.values = {rng.uniform(0.0, 10.0), rng.uniform(0.0, 10.0), rng.uniform(0.0, 10.0)};
  inst.true_class = sea_class(inst.values[0], inst.values[1], kSeaThresholds[concept_id]);
  return inst;
}

Instance generate_stagger(int concept_id, Rng& rng) {
  Instance inst;
  int size = static_cast<int>(rng.below(3));
  int color = static_cast<int>(rng.below(3));
  int shape = static_cast<int>(rng.below(3));
  inst.values = {static_cast<double>(size), static_cast<double>(color),
                 static_cast<double>(shape)};
  inst.true_class = stagger_class(concept_id, size, color, shape);
  return inst;
}

Instance generate_led(int concept_id, Rng& rng) {
  Instance inst;
  int digit = static_cast<int>(rng.below(10));
  inst.values.resize(24);
  for (int i = 0; i < 24; ++i) inst.values[i] = static_cast<double>(rng.below(2));
  const auto positions = led_relevant_positions(concept_id);
  const auto& segments = led_segments(digit);
  for (int j = 0; j < 7; ++j) inst.values[positions[j]] = static_cast<double>(segments[j]);
  inst.true_class = digit;
  return inst;
}

Instance generate_agrawal(int concept_id, Rng& rng) {
  double salary = rng.uniform(20000.0, 150000.0);
  double commission = salary >= 75000.0 ? 0.0 : rng.uniform(10000.0, 75000.0);
  int age = 20 + static_cast<int>(rng.below(61));
  int elevel = static_cast<int>(rng.below(5));
  int car = static_cast<int>(rng.below(20));
  int zipcode = static_cast<int>(rng.below(9));
  double hvalue = static_cast<double>(zipcode + 1) * 100000.0 * rng.uniform(0.5, 1.5);
  int hyears = 1 + static_cast<int>(rng.below(30));
  double loan = rng.uniform(0.0, 500000.0);
  Instance inst;
  inst.values = {salary,
                 commission,
                 static_cast<double>(age),
                 static_cast<double>(elevel),
                 static_cast<double>(car),
                 static_cast<double>(zipcode),
                 hvalue,
                 static_cast<double>(hyears),
                 loan};
  inst.true_class = agrawal_class(concept_id + 1, salary, age, elevel);
  return inst;
}

Instance generate_hyperplane(int concept_id, Rng& rng) {
  static constexpr int kCached = 32;
  static const auto cache = [] {
    std::array<std::array<double, 10>, kCached> w{};
    for (int c = 0; c < kCached; ++c) w[c] = hyperplane_weights(c);
    return w;
  }();
  Instance inst;
  inst.values.resize(10);
  for (double& v : inst.values) v = rng.uniform();
  if (concept_id < kCached) {
    inst.true_class = hyperplane_class(cache[concept_id], inst.values);
  } else {
    inst.true_class = hyperplane_class(hyperplane_weights(concept_id), inst.values);
  }
  return inst;
}

}  // namespace

std::string_view family_name(Family family) {
  switch (family) {
    case Family::Sea: return "sea";
    case Family::Stagger: return "stagger";
    case Family::Led: return "led";
    case Family::Agrawal: return "agrawal";
    case Family::Hyperplane: return "hyperplane";
  }
  throw std::invalid_argument("unknown family");
}

Family parse_family(std::string_view name) {
  if (name == "sea") return Family::Sea;
  if (name == "stagger") return Family::Stagger;
  if (name == "led") return Family::Led;
  if (name == "agrawal") return Family::Agrawal;
  if (name == "hyperplane") return Family::Hyperplane;
  throw std::invalid_argument("unknown dataset: " + std::string(name));
}

std::shared_ptr<const Schema> family_schema(Family family) {
  static const auto sea = std::make_shared<const Schema>(make_sea_schema());
  static const auto stagger = std::make_shared<const Schema>(make_stagger_schema());
  static const auto led = std::make_shared<const Schema>(make_led_schema());
  static const auto agrawal = std::make_shared<const Schema>(make_agrawal_schema());
  static const auto hyperplane = std::make_shared<const Schema>(make_hyperplane_schema());
  switch (family) {
    case Family::Sea: return sea;
    case Family::Stagger: return stagger;
    case Family::Led: return led;
    case Family::Agrawal: return agrawal;
    case Family::Hyperplane: return hyperplane;
  }
  throw std::invalid_argument("unknown family");
}

int family_concept_count(Family family) {
  switch (family) {
    case Family::Sea: return 4;
    case Family::Stagger: return 3;
    case Family::Led: return 4;
    case Family::Agrawal: return 4;
    case Family::Hyperplane: return 4;
  }
  throw std::invalid_argument("unknown family");
}

bool valid_concept(Family family, int concept_id) {
  if (concept_id < 0) return false;
  switch (family) {
    case Family::Sea: return concept_id < 4;
    case Family::Stagger: return concept_id < 3;
    case Family::Agrawal: return concept_id < 4;
    case Family::Led:
    case Family::Hyperplane:
      return true;  // parameterized families
  }
  return false;
}

Instance generate(Family family, int concept_id, Rng& rng) {
  if (!valid_concept(family, concept_id)) {
    throw std::invalid_argument("invalid concept " + std::to_string(concept_id) + " for " +
                                std::string(family_name(family)));
  }
  switch (family) {
    case Family::Sea: return generate_sea(concept_id, rng);
    case Family::Stagger: return generate_stagger(concept_id, rng);
    case Family::Led: return generate_led(concept_id, rng);
    case Family::Agrawal: return generate_agrawal(concept_id, rng);
    case Family::Hyperplane: return generate_hyperplane(concept_id, rng);
  }
  throw std::invalid_argument("unknown family");
}

const std::array<double, 4> kSeaThresholds = {8.0, 9.0, 7.0, 9.5};

int sea_class(double f1, double f2, double threshold) {
  return f1 + f2 <= threshold ? 0 : 1;
}

int stagger_class(int concept_id, int size, int color, int shape) {
  // size: 0 small, 1 medium, 2 large; color: 0 red, 1 green, 2 blue;
  // shape: 0 circle, 1 square, 2 triangle
  switch (concept_id) {
    case 0: return (size == 0 && color == 0) ? 1 : 0;
    case 1: return (color == 1 || shape == 0) ? 1 : 0;
    case 2: return (size == 1 || size == 2) ? 1 : 0;
  }
  throw std::invalid_argument("invalid stagger concept");
}

const std::array<int, 7>& led_segments(int digit) {
  static const std::array<std::array<int, 7>, 10> table = {{
      {1, 1, 1, 1, 1, 1, 0},  // 0
      {0, 1, 1, 0, 0, 0, 0},  // 1
      {1, 1, 0, 1, 1, 0, 1},  // 2
      {1, 1, 1, 1, 0, 0, 1},  // 3
      {0, 1, 1, 0, 0, 1, 1},  // 4
      {1, 0, 1, 1, 0, 1, 1},  // 5
      {1, 0, 1, 1, 1, 1, 1},  // 6
      {1, 1, 1, 0, 0, 0, 0},  // 7
      {1, 1, 1, 1, 1, 1, 1},  // 8
      {1, 1, 1, 1, 0, 1, 1},  // 9
  }};
  if (digit < 0 || digit > 9) throw std::invalid_argument("digit out of range");
  return table[digit];
}

std::array<int, 7> led_relevant_positions(int concept_id) {
  if (concept_id < 0) throw std::invalid_argument("invalid led concept");
  std::array<int, 7> out{};
  for (int j = 0; j < 7; ++j) out[j] = (7 * concept_id + j) % 24;
  return out;
}

int agrawal_class(int function, double salary, int age, int elevel) {
  auto in = [](double v, double lo, double hi) { return lo <= v && v <= hi; };
  switch (function) {
    case 1:
      return (age < 40 || age >= 60) ? 0 : 1;
    case 2:
      if (age < 40) return in(salary, 50000, 100000) ? 0 : 1;
      if (age < 60) return in(salary, 75000, 125000) ? 0 : 1;
      return in(salary, 25000, 75000) ? 0 : 1;
    case 3:
      if (age < 40) return (elevel == 0 || elevel == 1) ? 0 : 1;
      if (age < 60) return (elevel >= 1 && elevel <= 3) ? 0 : 1;
      return (elevel >= 2 && elevel <= 4) ? 0 : 1;
    case 4:
      if (age < 40) {
        return (elevel == 0 || elevel == 1) ? (in(salary, 25000, 75000) ? 0 : 1)
                                            : (in(salary, 50000, 100000) ? 0 : 1);
      }
      if (age < 60) {
        return (elevel >= 1 && elevel <= 3) ? (in(salary, 50000, 100000) ? 0 : 1)
                                            : (in(salary, 75000, 125000) ? 0 : 1);
      }
      return (elevel >= 2 && elevel <= 4) ? (in(salary, 50000, 100000) ? 0 : 1)
                                          : (in(salary, 25000, 75000) ? 0 : 1);
  }
  throw std::invalid_argument("invalid agrawal function");
}

std::array<double, 10> hyperplane_weights(int concept_id) {
  if (concept_id < 0) throw std::invalid_argument("invalid hyperplane concept");
  Rng rng(substream(0x68797065ULL, static_cast<std::uint64_t>(concept_id)));
  std::array<double, 10> w{};
  for (double& x : w) x = rng.uniform();
  return w;
}

int hyperplane_class(std::span<const double> weights, std::span<const double> x) {
  double dot = 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    dot += weights[i] * x[i];
    sum += weights[i];
  }
  return dot >= sum / 2.0 ? 1 : 0;
}

double incoming_probability(std::uint64_t t, std::uint64_t change_point, std::uint64_t width) {
  if (width == 0) return t >= change_point ? 1.0 : 0.0;
  double d = static_cast<double>(static_cast<std::int64_t>(t) -
                                 static_cast<std::int64_t>(change_point));
  return 1.0 / (1.0 + std::exp(-4.0 * d / static_cast<double>(width)));
}

DriftStream::DriftStream(Family family, DriftSpec spec, std::uint64_t length, std::uint64_t seed)
    : family_(family),
      spec_(std::move(spec)),
      length_(length),
      rng_(seed),
      schema_(family_schema(family)) {
  if (spec_.concept_sequence.empty()) spec_.concept_sequence = {0};
  if (spec_.concept_sequence.size() != spec_.change_points.size() + 1)
    throw std::invalid_argument("concept sequence must have one entry per segment");
  for (std::size_t i = 0; i + 1 < spec_.change_points.size(); ++i) {
    if (spec_.change_points[i] >= spec_.change_points[i + 1])
      throw std::invalid_argument("change points must be strictly increasing");
  }
  for (int c : spec_.concept_sequence) {
    if (!valid_concept(family_, c))
      throw std::invalid_argument("invalid concept in sequence: " + std::to_string(c));
  }
}

int DriftStream::concept_at(std::uint64_t t, Rng& rng) const {
  const auto& cps = spec_.change_points;
  std::size_t active = 0;
  while (active < cps.size() && cps[active] <= t) ++active;
  if (cps.empty() || spec_.transition_width == 0) return spec_.concept_sequence[active];

  // Nearest change point owns the transition window around it.
  std::size_t j;
  if (active == 0) {
    j = 0;
  } else if (active >= cps.size()) {
    j = cps.size() - 1;
  } else {
    std::uint64_t d_prev = t - cps[active - 1];
    std::uint64_t d_next = cps[active] - t;
    j = d_prev <= d_next ? active - 1 : active;
  }
  std::uint64_t dist = t >= cps[j] ? t - cps[j] : cps[j] - t;
  if (dist > 4 * spec_.transition_width) return spec_.concept_sequence[active];
  double p_new = incoming_probability(t, cps[j], spec_.transition_width);
  return rng.uniform() < p_new ? spec_.concept_sequence[j + 1] : spec_.concept_sequence[j];
}

std::optional<Instance> DriftStream::next() {
  if (pos_ >= length_) return std::nullopt;
  int concept_id = concept_at(pos_, rng_);
  Instance inst = generate(family_, concept_id, rng_);
  ++pos_;
  return inst;
}

Instance inject_noise(Instance instance, const NoiseSpec& spec, const Schema& schema, Rng& rng) {
  if (spec.rate <= 0.0) return instance;
  if (spec.mode == NoiseSpec::Mode::ClassFlip) {
    if (rng.uniform() < spec.rate) {
      int k = schema.class_count();
      int offset = 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(k - 1)));
      instance.true_class = (instance.true_class + offset) % k;
      if (instance.visible_class) instance.visible_class = instance.true_class;
    }
    return instance;
  }
  for (std::size_t a = 0; a < instance.values.size(); ++a) {
    const AttributeSpec& attr = schema.attributes[a];
    if (attr.values.size() != 2 || instance.is_missing(a)) continue;
    if (rng.uniform() < spec.rate) {
      instance.values[a] = instance.nominal(a) == 0 ? 1.0 : 0.0;
    }
  }
  return instance;
}

}  // namespace driftstream
