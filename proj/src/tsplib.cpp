#include "tspforge/tsplib.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "tspforge/errors.hpp"

namespace tspforge {

namespace {

std::string trim(const std::string& s) {
  size_t a = 0;
  size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

[[noreturn]] void fail(const std::string& source, int line,
                       const std::string& what) {
  throw io_error(source + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

std::string to_tsplib(const Instance& inst) {
  std::ostringstream out;
  out << "NAME: " << inst.id() << "\n";
  out << "COMMENT: grid " << inst.grid_size() << "\n";
  out << "TYPE: TSP\n";
  out << "DIMENSION: " << inst.n() << "\n";
  out << "EDGE_WEIGHT_TYPE: EUC_2D\n";
  out << "NODE_COORD_SECTION\n";
  for (int i = 0; i < inst.n(); ++i) {
    const Point& p = inst.city(i);
    out << (i + 1) << " " << p.x << " " << p.y << "\n";
  }
  out << "EOF\n";
  return out.str();
}

void write_tsplib(const Instance& inst, const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw io_error("cannot open for writing: " + path.string());
  f << to_tsplib(inst);
  if (!f) throw io_error("write failed: " + path.string());
}

Instance parse_tsplib(std::istream& in, const std::string& source) {
  std::string name;
  int dimension = -1;
  int grid_size = -1;
  bool saw_euc2d = false;
  std::vector<Point> cities;

  std::string line;
  int lineno = 0;
  bool in_coords = false;
  int coords_seen = 0;

  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t == "EOF") break;

    if (in_coords) {
      std::istringstream row(t);
      int idx = 0;
      double x = 0.0;
      double y = 0.0;
      if (!(row >> idx >> x >> y)) {
        fail(source, lineno, "malformed node coordinate line");
      }
      if (idx != coords_seen + 1) {
        fail(source, lineno,
             "node indices must be 1-based and consecutive (expected " +
                 std::to_string(coords_seen + 1) + ", got " +
                 std::to_string(idx) + ")");
      }
      cities.push_back(Point{static_cast<int>(x), static_cast<int>(y)});
      ++coords_seen;
      if (coords_seen == dimension) in_coords = false;
      continue;
    }

    if (t == "NODE_COORD_SECTION") {
      if (dimension <= 0) {
        fail(source, lineno, "NODE_COORD_SECTION before DIMENSION");
      }
      in_coords = true;
      continue;
    }

    const size_t colon = t.find(':');
    if (colon == std::string::npos) {
      fail(source, lineno, "expected 'KEY: value' line, got '" + t + "'");
    }
    const std::string key = trim(t.substr(0, colon));
    const std::string value = trim(t.substr(colon + 1));

    if (key == "NAME") {
      name = value;
    } else if (key == "TYPE") {
      if (value != "TSP") fail(source, lineno, "TYPE must be TSP");
    } else if (key == "DIMENSION") {
      try {
        dimension = std::stoi(value);
      } catch (const std::exception&) {
        fail(source, lineno, "DIMENSION is not an integer");
      }
      if (dimension < 3) fail(source, lineno, "DIMENSION must be >= 3");
    } else if (key == "EDGE_WEIGHT_TYPE") {
      if (value != "EUC_2D") {
        fail(source, lineno,
             "unsupported EDGE_WEIGHT_TYPE '" + value + "' (only EUC_2D)");
      }
      saw_euc2d = true;
    } else if (key == "COMMENT") {
      std::istringstream c(value);
      std::string word;
      if (c >> word && word == "grid") c >> grid_size;
    } else {
      fail(source, lineno, "unknown keyword '" + key + "'");
    }
  }

  if (!saw_euc2d) {
    fail(source, lineno, "missing EDGE_WEIGHT_TYPE: EUC_2D");
  }
  if (dimension <= 0) fail(source, lineno, "missing DIMENSION");
  if (coords_seen != dimension) {
    fail(source, lineno,
         "expected " + std::to_string(dimension) + " coordinates, got " +
             std::to_string(coords_seen));
  }
  if (name.empty()) name = source;

  if (grid_size < 0) {
    int max_coord = 0;
    for (const Point& p : cities) {
      max_coord = std::max({max_coord, p.x, p.y});
    }
    grid_size = max_coord + 1;
  }

  try {
    return Instance(name, grid_size, std::move(cities));
  } catch (const usage_error& e) {
    throw io_error(source + ": " + e.what());
  }
}

Instance read_tsplib(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw io_error("cannot open: " + path.string());
  return parse_tsplib(f, path.filename().string());
}

}  // namespace tspforge
