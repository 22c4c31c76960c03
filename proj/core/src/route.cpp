#include "bbnsim/route.hpp"

namespace bbnsim {

std::string to_string(Protocol p) {
  switch (p) {
    case Protocol::Spr: return "spr";
    case Protocol::Cmr: return "cmr";
    case Protocol::Orpl: return "orpl";
    case Protocol::Loadng: return "loadng";
  }
  return "unknown";
}

std::string to_string(RouteKind k) {
  switch (k) {
    case RouteKind::Primary: return "primary";
    case RouteKind::Alternate: return "alternate";
    case RouteKind::DirectFallback: return "direct_fallback";
    case RouteKind::NoRoute: return "no_route";
  }
  return "unknown";
}

}  // namespace bbnsim
