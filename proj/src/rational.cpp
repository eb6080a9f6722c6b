#include "isocut/rational.hpp"

#include <cctype>

namespace isocut {

Ratio parse_ratio(const std::string& text) {
  auto bad = [&] { return InvalidInput("cannot parse ratio '" + text + "'"); };
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      std::size_t used = 0;
      long long num = std::stoll(text.substr(0, slash), &used);
      if (used != slash) throw bad();
      std::string rest = text.substr(slash + 1);
      long long den = std::stoll(rest, &used);
      if (used != rest.size()) throw bad();
      return Ratio(num, den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) {
      std::size_t used = 0;
      long long num = std::stoll(text, &used);
      if (used != text.size()) throw bad();
      return Ratio(num, 1);
    }
    std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 12) throw bad();
    for (char c : frac)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
    long long den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    long long w = whole.empty() ? 0 : std::stoll(whole);
    return Ratio(w * den + std::stoll(frac), den);
  } catch (const InvalidInput&) {
    throw;
  } catch (const std::exception&) {
    throw bad();
  }
}

}  // namespace isocut
