#pragma once

namespace tonic {

/// Serial runs a kernel on one thread; Parallel spreads it over OpenMP
/// threads. Both produce identical results.
enum class Exec { Serial, Parallel };

}  // namespace tonic
