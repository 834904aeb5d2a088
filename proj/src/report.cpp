#include "pmet/report.hpp"

#include <stdexcept>

namespace pmet {

std::string verdictName(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Undecided: return "undecided";
    }
    throw std::logic_error("unreachable verdict");
}

}  // namespace pmet
