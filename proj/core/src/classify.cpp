#include "twobridge/conway.hpp"
#include "twobridge/diagram.hpp"

namespace twobridge {

LinkClass classify(const ConwayWord& w) {
  const Diagram d = build_diagram(w);
  LinkClass out;
  if (d.component_count() == 1) return out;
  out.kind = LinkKind::TwoComponentLink;
  out.linking_number = d.linking_number();
  out.proper = *out.linking_number % 2 == 0;
  return out;
}

}  // namespace twobridge
