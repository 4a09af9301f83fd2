#include "bimult/symbol_registry.hpp"

#include "bimult/transference.hpp"

namespace bimult {

namespace {

Symbol2D base_symbol(const std::string& id) {
  if (id == "one") return constant_symbol();
  if (id == "bht") return bht_symbol();
  if (id == "tent") return tent_lambda();
  if (id == "box") return indicator_box();
  if (id == "fejer2") return fejer_square_symbol();
  if (id == "trig") return trig_symbol(1, 1);
  if (id == "tentcell") return scaled_tent_cell();
  if (id == "boxmoll") return mollified_box_cell();
  if (id == "bhtcell") return bht_cell();
  throw ConfigError("unknown symbol id: " + id);
}

}  // namespace

Symbol2D symbol_by_id(const std::string& id) {
  const std::string suffix = "-periodized";
  if (id.size() > suffix.size() &&
      id.compare(id.size() - suffix.size(), suffix.size(), suffix) == 0) {
    return periodize_symbol(base_symbol(id.substr(0, id.size() - suffix.size())));
  }
  return base_symbol(id);
}

std::vector<std::pair<std::string, std::string>> symbol_catalogue() {
  return {
      {"one", "constant symbol 1"},
      {"bht", "-i sgn(xi - eta)"},
      {"tent", "product tent (1-|xi|)(1-|eta|) on [-1,1)^2"},
      {"box", "indicator of the half-open cell [-1/2,1/2)^2"},
      {"fejer2", "squared-sinc time profile sin^2(4 pi x)/(4 pi x)^2, both axes"},
      {"trig", "e^{2 pi i (xi + eta)}"},
      {"tentcell", "tent scaled into the unit cell"},
      {"boxmoll", "smooth plateau supported in [-3/8,3/8]^2"},
      {"bhtcell", "bht restricted to the unit cell"},
      {"tentcell-periodized", "periodized cell tent (smoothness: continuous)"},
      {"boxmoll-periodized", "periodized smooth plateau"},
      {"box-periodized", "periodized cell indicator (== 1)"},
      {"bhtcell-periodized", "periodized bht cell symbol"},
  };
}

}  // namespace bimult
