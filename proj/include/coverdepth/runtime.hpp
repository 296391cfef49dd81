#pragma once

namespace coverdepth {

// Process-wide cap on worker threads for census enumeration and Monte Carlo.
// 0 restores the default (hardware concurrency, clamped to 8). The CLI wires
// the COVERDEPTH_THREADS environment variable to this.
void set_thread_cap(unsigned cap);
unsigned thread_budget();

}  // namespace coverdepth
