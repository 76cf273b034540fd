#ifndef OHBA_VERSION_HPP
#define OHBA_VERSION_HPP

namespace ohba {

// Engine version; bump when any search or formula result can change.
// Cached results are keyed on this string.
inline constexpr const char* kEngineVersion = "1.0.0";

} // namespace ohba

#endif
