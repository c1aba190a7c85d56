#ifndef STATSP_TSPLIB_HPP
#define STATSP_TSPLIB_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "statsp/distance_matrix.hpp"

namespace statsp {

/// One node of an instance. Ids are remapped to 1..n in file order.
struct NodeCoord {
  int id = 0;
  double x = 0.0;
  double y = 0.0;
};

/// Distance conventions. Euc2d/Geo/Att follow the TSPLIB reference
/// definitions (integer-valued); RawEuc is the unrounded planar Euclidean
/// distance on the file coordinates and is applicable to any instance.
enum class Metric { RawEuc, Euc2d, Geo, Att };

const char* metric_name(Metric metric);

/// Recognizes "raw", "euc2d", "geo", "att" (case-insensitive).
std::optional<Metric> metric_from_string(std::string_view text);

struct TspInstance {
  std::string name;
  int n = 0;
  std::vector<NodeCoord> coords;
  Metric declared_metric = Metric::RawEuc;  // from EDGE_WEIGHT_TYPE
  Metric active_metric = Metric::RawEuc;    // used to build distances
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// Parses the text of a TSPLIB NODE_COORD instance. Requires DIMENSION,
/// EDGE_WEIGHT_TYPE in {EUC_2D, GEO, ATT} and a NODE_COORD_SECTION with
/// exactly DIMENSION rows; other keywords are ignored. active_metric
/// defaults to RawEuc.
TspInstance parse_instance(const std::string& text);

/// Reads and parses a file. Throws std::runtime_error if unreadable.
TspInstance load_instance(const std::string& path);

/// TSPLIB-style text for an instance; coordinates keep full precision so
/// parse_instance(serialize_instance(x)) round-trips exactly.
std::string serialize_instance(const TspInstance& instance);

/// Pairwise distance under a metric. Symmetric, zero for identical coords.
double distance(Metric metric, const NodeCoord& a, const NodeCoord& b);

/// n x n matrix of distances under the instance's active metric.
DistanceMatrix build_distance_matrix(const TspInstance& instance);

}  // namespace statsp

#endif  // STATSP_TSPLIB_HPP
