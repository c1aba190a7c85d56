#include "statsp/tsplib.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace statsp {
namespace {

// TSPLIB nint: truncating cast of x + 0.5.
int nint(double x) { return static_cast<int>(x + 0.5); }

// Degrees given as DDD.MM (integer degrees, then minutes) to radians.
double geo_radians(double x) {
  constexpr double kPi = 3.141592;
  const int deg = nint(x);
  const double minutes = x - deg;
  return kPi * (deg + 5.0 * minutes / 3.0) / 180.0;
}

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

const char* metric_name(Metric metric) {
  switch (metric) {
    case Metric::RawEuc: return "RAW_EUC";
    case Metric::Euc2d: return "EUC_2D";
    case Metric::Geo: return "GEO";
    case Metric::Att: return "ATT";
  }
  return "?";
}

std::optional<Metric> metric_from_string(std::string_view text) {
  std::string key = upper(std::string(text));
  if (key == "RAW" || key == "RAW_EUC") return Metric::RawEuc;
  if (key == "EUC2D" || key == "EUC_2D") return Metric::Euc2d;
  if (key == "GEO") return Metric::Geo;
  if (key == "ATT") return Metric::Att;
  return std::nullopt;
}

TspInstance parse_instance(const std::string& text) {
  TspInstance instance;
  bool have_dimension = false;
  bool have_weight_type = false;

  std::istringstream in(text);
  std::string raw_line;
  int line_no = 0;
  int coords_expected = 0;

  while (std::getline(in, raw_line)) {
    ++line_no;
    const std::string line = trim(raw_line);
    if (line.empty()) continue;
    if (upper(line) == "EOF") break;

    std::string key;
    std::string value;
    const auto colon = line.find(':');
    if (colon != std::string::npos) {
      key = upper(trim(line.substr(0, colon)));
      value = trim(line.substr(colon + 1));
    } else {
      key = upper(line);
    }

    if (key == "NAME") {
      instance.name = value;
    } else if (key == "DIMENSION") {
      try {
        instance.n = std::stoi(value);
      } catch (const std::exception&) {
        throw ParseError("DIMENSION is not an integer: '" + value + "'", line_no);
      }
      if (instance.n < 3) {
        throw ParseError("DIMENSION must be at least 3, got " + std::to_string(instance.n),
                         line_no);
      }
      have_dimension = true;
      coords_expected = instance.n;
    } else if (key == "EDGE_WEIGHT_TYPE") {
      const std::string type = upper(value);
      if (type == "EUC_2D") {
        instance.declared_metric = Metric::Euc2d;
      } else if (type == "GEO") {
        instance.declared_metric = Metric::Geo;
      } else if (type == "ATT") {
        instance.declared_metric = Metric::Att;
      } else {
        throw ParseError("unsupported EDGE_WEIGHT_TYPE '" + value + "'", line_no);
      }
      have_weight_type = true;
    } else if (key == "NODE_COORD_SECTION") {
      if (!have_dimension) {
        throw ParseError("NODE_COORD_SECTION before DIMENSION", line_no);
      }
      while (static_cast<int>(instance.coords.size()) < coords_expected) {
        if (!std::getline(in, raw_line)) {
          throw ParseError("coordinate section ended after " +
                               std::to_string(instance.coords.size()) + " of " +
                               std::to_string(coords_expected) + " nodes",
                           line_no);
        }
        ++line_no;
        const std::string row = trim(raw_line);
        if (row.empty()) continue;
        if (upper(row) == "EOF") {
          throw ParseError("coordinate section ended after " +
                               std::to_string(instance.coords.size()) + " of " +
                               std::to_string(coords_expected) + " nodes",
                           line_no);
        }
        std::istringstream fields(row);
        long long file_id = 0;
        double x = 0.0;
        double y = 0.0;
        if (!(fields >> file_id >> x >> y)) {
          throw ParseError("malformed coordinate row '" + row + "'", line_no);
        }
        // File ids may be arbitrary; nodes are renumbered 1..n in file order.
        NodeCoord coord;
        coord.id = static_cast<int>(instance.coords.size()) + 1;
        coord.x = x;
        coord.y = y;
        instance.coords.push_back(coord);
      }
    }
    // Other keywords (TYPE, COMMENT, DISPLAY_DATA_TYPE, ...) are ignored.
  }

  if (!have_dimension) {
    throw ParseError("missing DIMENSION", line_no);
  }
  if (!have_weight_type) {
    throw ParseError("missing EDGE_WEIGHT_TYPE", line_no);
  }
  if (static_cast<int>(instance.coords.size()) != instance.n) {
    throw ParseError("expected " + std::to_string(instance.n) + " coordinates, found " +
                         std::to_string(instance.coords.size()),
                     line_no);
  }
  instance.active_metric = Metric::RawEuc;
  return instance;
}

TspInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open instance file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

std::string serialize_instance(const TspInstance& instance) {
  std::ostringstream out;
  out << "NAME: " << instance.name << "\n";
  out << "TYPE: TSP\n";
  out << "DIMENSION: " << instance.n << "\n";
  out << "EDGE_WEIGHT_TYPE: ";
  switch (instance.declared_metric) {
    case Metric::Euc2d: out << "EUC_2D"; break;
    case Metric::Geo: out << "GEO"; break;
    case Metric::Att: out << "ATT"; break;
    case Metric::RawEuc: out << "EUC_2D"; break;  // RawEuc has no file spelling
  }
  out << "\nNODE_COORD_SECTION\n";
  char buf[80];
  for (const NodeCoord& c : instance.coords) {
    std::snprintf(buf, sizeof(buf), "%d %.17g %.17g\n", c.id, c.x, c.y);
    out << buf;
  }
  out << "EOF\n";
  return out.str();
}

double distance(Metric metric, const NodeCoord& a, const NodeCoord& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  switch (metric) {
    case Metric::RawEuc:
      return std::sqrt(dx * dx + dy * dy);
    case Metric::Euc2d:
      return nint(std::sqrt(dx * dx + dy * dy));
    case Metric::Att: {
      const double r = std::sqrt((dx * dx + dy * dy) / 10.0);
      const int t = nint(r);
      return t < r ? t + 1 : t;
    }
    case Metric::Geo: {
      constexpr double kEarthRadius = 6378.388;
      const double lat_a = geo_radians(a.x);
      const double lon_a = geo_radians(a.y);
      const double lat_b = geo_radians(b.x);
      const double lon_b = geo_radians(b.y);
      if (lat_a == lat_b && lon_a == lon_b) return 0.0;
      const double q1 = std::cos(lon_a - lon_b);
      const double q2 = std::cos(lat_a - lat_b);
      const double q3 = std::cos(lat_a + lat_b);
      return static_cast<int>(kEarthRadius *
                                  std::acos(0.5 * ((1.0 + q1) * q2 - (1.0 - q1) * q3)) +
                              1.0);
    }
  }
  return 0.0;
}

DistanceMatrix build_distance_matrix(const TspInstance& instance) {
  DistanceMatrix dmat(instance.n);
  for (int i = 0; i < instance.n; ++i) {
    for (int j = i + 1; j < instance.n; ++j) {
      dmat.set(i, j,
               distance(instance.active_metric, instance.coords[static_cast<std::size_t>(i)],
                        instance.coords[static_cast<std::size_t>(j)]));
    }
  }
  return dmat;
}

}  // namespace statsp
