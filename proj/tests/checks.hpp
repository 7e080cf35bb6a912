#pragma once

// Minimal check harness shared by the test programs.  CHECK* record failures
// and keep going; finish() prints a summary and gives main()'s exit status.

#include <cstdio>
#include <sstream>
#include <string>

namespace checks {

inline int total = 0;
inline int failed = 0;

inline void record(bool ok, const char* what, const char* file, int line, const std::string& detail = "") {
    ++total;
    if (!ok) {
        ++failed;
        std::printf("FAIL %s:%d  %s%s%s\n", file, line, what, detail.empty() ? "" : "  ", detail.c_str());
    }
}

template <class A, class B>
void record_eq(const A& a, const B& b, const char* what, const char* file, int line) {
    bool ok = (a == b);
    std::string detail;
    if (!ok) {
        std::ostringstream os;
        os << "got " << a << ", want " << b;
        detail = os.str();
    }
    record(ok, what, file, line, detail);
}

inline int finish(const char* name) {
    std::printf("%s: %d checks, %d failures\n", name, total, failed);
    return failed == 0 ? 0 : 1;
}

}  // namespace checks

#define CHECK(cond) ::checks::record(static_cast<bool>(cond), #cond, __FILE__, __LINE__)
#define CHECK_EQ(a, b) ::checks::record_eq((a), (b), #a " == " #b, __FILE__, __LINE__)
#define CHECK_THROWS(expr, extype)                                            \
    do {                                                                       \
        bool caught_ = false;                                                  \
        try {                                                                  \
            (void)(expr);                                                      \
        } catch (const extype&) {                                              \
            caught_ = true;                                                    \
        } catch (...) {                                                        \
        }                                                                      \
        ::checks::record(caught_, #expr " throws " #extype, __FILE__, __LINE__); \
    } while (0)
