#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "ntarp/error.hpp"
#include "ntarp/tarp.hpp"

namespace ntarp {

std::vector<double> sample_direction(std::mt19937_64& rng, std::size_t dim) {
  if (dim == 0) throw ConfigError("direction dimension must be positive");
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> a(dim);
  for (;;) {
    double norm2 = 0.0;
    for (auto& v : a) {
      v = normal(rng);
      norm2 += v * v;
    }
    if (norm2 > 0.0) {
      const double norm = std::sqrt(norm2);
      for (auto& v : a) v /= norm;
      return a;
    }
  }
}

void DirectionStream::fill(std::size_t count, std::vector<double>& out) {
  out.resize(count * dim_);
  for (std::size_t p = 0; p < count; ++p) {
    auto a = next();
    std::copy(a.begin(), a.end(), out.begin() + static_cast<std::ptrdiff_t>(p * dim_));
  }
}

Label ProjectionStump::classify(std::span<const double> expanded) const {
  if (expanded.size() != direction.size()) throw ConfigError("feature length does not match the direction");
  double z = 0.0;
  for (std::size_t j = 0; j < direction.size(); ++j) z += expanded[j] * direction[j];
  return z - threshold >= 0.0 ? orientation : -orientation;
}

Label TarpModel::predict(std::span<const double> x) const {
  return stump.classify(feature_map.expand(x));
}

std::vector<Label> TarpModel::predict_all(const Dataset& data) const {
  std::vector<Label> out(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) out[i] = predict(data.row(i));
  return out;
}

namespace {

constexpr const char* kMagic = "ntarp-model";
constexpr int kVersion = 1;

template <typename T>
T read_field(std::istream& in, const std::string& name) {
  std::string key;
  T value{};
  if (!(in >> key) || key != name) throw DataError("model file: expected field '" + name + "'");
  if (!(in >> value)) throw DataError("model file: bad value for '" + name + "'");
  return value;
}

template <typename T>
std::vector<T> read_list(std::istream& in, const std::string& name) {
  const auto count = read_field<std::size_t>(in, name);
  std::vector<T> values(count);
  for (auto& v : values) {
    if (!(in >> v)) throw DataError("model file: short list for '" + name + "'");
  }
  return values;
}

}  // namespace

void save_model(const TarpModel& model, std::ostream& out) {
  std::ostringstream s;
  s << std::setprecision(std::numeric_limits<double>::max_digits10);
  s << kMagic << ' ' << kVersion << '\n';
  s << "input_dim " << model.feature_map.input_dim() << '\n';
  s << "order " << model.feature_map.order() << '\n';
  s << "projections " << model.projections << '\n';
  s << "seed " << model.seed << '\n';
  s << "sample_count " << model.stump.sample_count << '\n';
  s << "error_count " << model.stump.error_count << '\n';
  s << "orientation " << model.stump.orientation << '\n';
  s << "threshold " << model.stump.threshold << '\n';
  s << "direction " << model.stump.direction.size();
  for (double v : model.stump.direction) s << ' ' << v;
  s << '\n';
  s << "per_projection_errors " << model.per_projection_errors.size();
  for (auto e : model.per_projection_errors) s << ' ' << e;
  s << '\n';
  out << s.str();
}

TarpModel load_model(std::istream& in) {
  if (read_field<int>(in, kMagic) != kVersion) throw DataError("model file: unsupported version");
  const auto d = read_field<std::size_t>(in, "input_dim");
  const auto k = read_field<std::size_t>(in, "order");

  TarpModel model;
  model.feature_map = PolyFeatureMap(d, k);
  model.projections = read_field<std::size_t>(in, "projections");
  model.seed = read_field<std::uint64_t>(in, "seed");
  model.stump.sample_count = read_field<std::size_t>(in, "sample_count");
  model.stump.error_count = read_field<std::size_t>(in, "error_count");
  model.stump.orientation = read_field<int>(in, "orientation");
  model.stump.threshold = read_field<double>(in, "threshold");
  model.stump.direction = read_list<double>(in, "direction");
  model.per_projection_errors = read_list<std::size_t>(in, "per_projection_errors");

  if (model.stump.orientation != 1 && model.stump.orientation != -1) {
    throw DataError("model file: orientation must be -1 or +1");
  }
  if (model.stump.direction.size() != model.feature_map.output_dim()) {
    throw DataError("model file: direction length does not match the feature map");
  }
  if (model.per_projection_errors.size() != model.projections) {
    throw DataError("model file: per_projection_errors length does not match projections");
  }
  return model;
}

}  // namespace ntarp
