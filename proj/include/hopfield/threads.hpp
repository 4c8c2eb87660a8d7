#pragma once

namespace hopfield {

/// Number of worker threads to use. `requested > 0` wins; otherwise the
/// HOPFIELD_THREADS environment variable caps parallelism (0 or unset = auto,
/// i.e. hardware concurrency). Always returns at least 1.
int resolve_threads(int requested = 0);

}  // namespace hopfield
