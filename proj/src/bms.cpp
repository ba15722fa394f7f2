#include "seqrel/bms.hpp"

namespace seqrel {

std::string format_trace(const std::vector<TraceEvent>& events, const MonomialOrder& ord) {
  std::ostringstream os;
  std::optional<Monomial> cur;
  for (const auto& e : events) {
    if (!cur || *cur != e.at) {
      os << "monomial " << format_monomial(e.at, ord) << "\n";
      cur = e.at;
    }
    switch (e.kind) {
      case TraceEvent::Kind::Test:
        os << "  test " << e.relation << ": " << e.result << (e.result == "0" ? " (succeeds)" : " (fails)") << "\n";
        break;
      case TraceEvent::Kind::StaircaseAdd:
        os << "  staircase += " << format_set(e.added, ord) << " -> " << e.result << "\n";
        break;
      case TraceEvent::Kind::Translate:
        os << "  translate " << e.relation << " -> " << e.result << "\n";
        break;
      case TraceEvent::Kind::Update:
        os << "  update " << e.relation << " -> " << e.result << "\n";
        break;
    }
  }
  return os.str();
}

}  // namespace seqrel
