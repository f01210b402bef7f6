#include "khc/json_io.hpp"

#include "khc/errors.hpp"

namespace khc {

using nlohmann::json;

namespace {

json entries_to_json(const HodgeBlockData& data) {
  json arr = json::array();
  for (const auto& [key, mult] : data.entries())
    arr.push_back({{"p", key.level}, {"alpha", key.angle.str()}, {"ell", key.ell}, {"mult", mult}});
  return arr;
}

json entries_to_json(const BlockSpectrum& data) {
  json arr = json::array();
  for (const auto& [key, mult] : data.entries())
    arr.push_back({{"alpha", key.angle.str()}, {"ell", key.ell}, {"mult", mult}});
  return arr;
}

HodgeBlockData entries_from_json(const json& arr, StoreKind kind) {
  HodgeBlockData data(kind);
  for (const auto& e : arr)
    data.add({e.at("p").get<int>(), Angle::parse(e.at("alpha").get<std::string>()),
              e.at("ell").get<int>()},
             e.at("mult").get<int>());
  return data;
}

BlockSpectrum spectrum_from_json(const json& arr, StoreKind kind) {
  BlockSpectrum data(kind);
  for (const auto& e : arr)
    data.add({Angle::parse(e.at("alpha").get<std::string>()), e.at("ell").get<int>()},
             e.at("mult").get<int>());
  return data;
}

template <typename T>
json int_map_to_json(const std::map<int, T>& m) {
  json obj = json::object();
  for (const auto& [k, v] : m) obj[std::to_string(k)] = v;
  return obj;
}

template <typename T>
std::map<int, T> int_map_from_json(const json& obj) {
  std::map<int, T> m;
  for (const auto& [k, v] : obj.items()) m[std::stoi(k)] = v.template get<T>();
  return m;
}

}  // namespace

json to_json(const HodgeSystem& s) {
  json local = json::object();
  for (const auto& [point, mu] : s.local) local[point] = entries_to_json(mu);
  return json{{"points", s.points},
              {"rank", s.rank()},
              {"hodge", int_map_to_json(s.hodge)},
              {"degrees", int_map_to_json(s.degrees)},
              {"local", local},
              {"infinity", entries_to_json(s.infinity)},
              {"pairing", to_string(s.pairing)}};
}

json to_json(const MonodromySystem& s) {
  json local = json::object();
  for (const auto& [point, mu] : s.local) local[point] = entries_to_json(mu);
  return json{{"points", s.points},
              {"rank", s.rank},
              {"local", local},
              {"infinity", entries_to_json(s.infinity)}};
}

json to_json(const Value& v) {
  return std::visit([](const auto& s) { return to_json(s); }, v);
}

json to_json(const RankOneLine& line) {
  json angles = json::object();
  for (const auto& [point, a] : line.finite_angles) angles[point] = a.str();
  return json{{"angles", angles},
              {"infinity", line.infinity_angle().str()},
              {"level_offset", line.level_offset}};
}

json to_json(const KatzTrace& trace) {
  json steps = json::array();
  for (const KatzStep& step : trace.steps)
    steps.push_back({{"line", to_json(step.line)},
                     {"chi", step.chi.str()},
                     {"before_rank", step.before_rank},
                     {"after_rank", step.after_rank},
                     {"snapshot", to_json(step.snapshot)}});
  return json{{"steps", steps}, {"terminal", to_json(trace.terminal)}};
}

HodgeSystem hodge_from_json(const json& j) {
  HodgeSystem s;
  s.points = j.at("points").get<std::vector<std::string>>();
  s.hodge = int_map_from_json<int>(j.at("hodge"));
  s.degrees = int_map_from_json<long long>(j.at("degrees"));
  for (const auto& [point, arr] : j.at("local").items())
    s.local.emplace(point, entries_from_json(arr, StoreKind::Mu));
  s.infinity = entries_from_json(j.at("infinity"), StoreKind::Nu);
  auto pairing = pairing_from_string(j.at("pairing").get<std::string>());
  if (!pairing) throw CalcError(ErrC::Inconsistent, "unknown pairing tag");
  s.pairing = *pairing;
  if (j.contains("rank") && j.at("rank").get<int>() != s.rank())
    throw CalcError(ErrC::Inconsistent, "stored rank disagrees with the Hodge numbers");
  s.validate();
  return s;
}

MonodromySystem monodromy_from_json(const json& j) {
  MonodromySystem s;
  s.points = j.at("points").get<std::vector<std::string>>();
  s.rank = j.at("rank").get<int>();
  for (const auto& [point, arr] : j.at("local").items())
    s.local.emplace(point, spectrum_from_json(arr, StoreKind::Mu));
  s.infinity = spectrum_from_json(j.at("infinity"), StoreKind::Nu);
  s.validate();
  return s;
}

Value value_from_json(const json& j) {
  if (j.contains("hodge")) return hodge_from_json(j);
  return monodromy_from_json(j);
}

}  // namespace khc
