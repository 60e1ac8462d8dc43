#pragma once

namespace yber {

/// YBER_THREADS when set, otherwise the hardware concurrency, clamped to 1..64.
int default_thread_count();

}  // namespace yber
