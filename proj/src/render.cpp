#include "khc/render.hpp"

#include "khc/json_io.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace khc {

std::string angle_display(const Angle& a) {
  std::string out = a.str();
  if (6 % a.den() == 0) {
    static const char* alias[6] = {"1", "-phi", "phibar", "-1", "phi", "-phibar"};
    out += "(";
    out += alias[a.num() * (6 / a.den()) % 6];
    out += ")";
  }
  return out;
}

namespace {

std::string pad(const std::string& text, std::size_t width) {
  return std::string(width > text.size() ? width - text.size() : 0, ' ') + text;
}

std::string spectrum_display(const BlockSpectrum& data) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, mult] : data.entries()) {
    if (!first) os << ", ";
    first = false;
    os << angle_display(key.angle) << " J(" << key.ell + 1 << ")";
    if (mult > 1) os << " x" << mult;
  }
  if (first) os << "-";
  return os.str();
}

}  // namespace

std::string render(const HodgeSystem& s, RenderFormat format) {
  if (format == RenderFormat::Json) return to_json(s).dump(2) + "\n";

  std::ostringstream os;
  os << "rank " << s.rank() << "  points";
  for (std::size_t i = 0; i < s.points.size(); ++i) os << (i ? ", " : " ") << s.points[i];
  os << "  pairing " << to_string(s.pairing) << "\n";

  os << "infinity:";
  for (const auto& [key, mult] : s.infinity.entries()) {
    os << " [p=" << key.level << " " << angle_display(key.angle) << " l=" << key.ell
       << " m=" << mult << "]";
  }
  os << "\n";

  struct Column {
    std::string point;
    Angle angle;
    int ell;
    std::string header;
  };
  std::vector<Column> columns;
  for (const auto& point : s.points) {
    const HodgeBlockData& mu = s.local_at(point);
    std::vector<std::pair<Angle, int>> families;
    for (const auto& [key, mult] : mu.entries()) {
      std::pair<Angle, int> fam{key.angle, key.ell};
      if (std::find(families.begin(), families.end(), fam) == families.end())
        families.push_back(fam);
    }
    std::sort(families.begin(), families.end());
    for (const auto& [angle, ell] : families) {
      std::ostringstream header;
      header << "mu(" << point << ", " << angle_display(angle) << ", l=" << ell << ")";
      columns.push_back({point, angle, ell, header.str()});
    }
  }

  std::vector<std::string> headers = {"p", "h^p"};
  for (const Column& c : columns) headers.push_back(c.header);
  headers.push_back("delta^p");
  std::vector<std::size_t> widths;
  for (const auto& h : headers) widths.push_back(h.size());

  std::vector<std::vector<std::string>> rows;
  for (int p = s.min_level(); p <= s.max_level(); ++p) {
    std::vector<std::string> row;
    row.push_back(std::to_string(p));
    row.push_back(std::to_string(s.h(p)));
    for (const Column& c : columns)
      row.push_back(std::to_string(s.local_at(c.point).at({p, c.angle, c.ell})));
    row.push_back(std::to_string(s.delta(p)));
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
    rows.push_back(std::move(row));
  }

  auto emit_row = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " | " : "") << pad(row[i], widths[i]);
    os << "\n";
  };
  emit_row(headers);
  for (const auto& row : rows) emit_row(row);
  return os.str();
}

std::string render(const MonodromySystem& s, RenderFormat format) {
  if (format == RenderFormat::Json) return to_json(s).dump(2) + "\n";

  std::ostringstream os;
  os << "rank " << s.rank << "  points";
  for (std::size_t i = 0; i < s.points.size(); ++i) os << (i ? ", " : " ") << s.points[i];
  os << "\n";
  for (const auto& point : s.points)
    os << point << " (mu): " << spectrum_display(s.local_at(point)) << "\n";
  os << "infinity (nu): " << spectrum_display(s.infinity) << "\n";
  return os.str();
}

std::string render(const Value& v, RenderFormat format) {
  return std::visit([format](const auto& s) { return render(s, format); }, v);
}

}  // namespace khc
