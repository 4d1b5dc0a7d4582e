// Times the exhaustive pair audits with the serial reference sweep and the
// OpenMP sweep, and checks that both produce identical reports.
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <stdexcept>
#include <string>

#include "iasi/audit.hpp"

namespace {

using iasi::AuditReport;
using iasi::ExecutionMode;
using iasi::SearchBounds;
using iasi::TheoremId;

double run_ms(TheoremId id, const SearchBounds& bounds, ExecutionMode mode,
              AuditReport& out) {
    auto start = std::chrono::steady_clock::now();
    out = iasi::audit(id, bounds, mode);
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

bool same_report(const AuditReport& a, const AuditReport& b) {
    if (a.theorem != b.theorem || a.checked != b.checked || a.verdict != b.verdict ||
        a.counterexamples.size() != b.counterexamples.size() ||
        a.readings.size() != b.readings.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.counterexamples.size(); ++i) {
        if (a.counterexamples[i].p != b.counterexamples[i].p ||
            a.counterexamples[i].q != b.counterexamples[i].q ||
            a.counterexamples[i].expected != b.counterexamples[i].expected ||
            a.counterexamples[i].observed != b.counterexamples[i].observed) {
            return false;
        }
    }
    for (std::size_t i = 0; i < a.readings.size(); ++i) {
        if (a.readings[i].reading != b.readings[i].reading ||
            a.readings[i].checked != b.readings[i].checked ||
            a.readings[i].agreements != b.readings[i].agreements) {
            return false;
        }
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    SearchBounds bounds;
    if (argc == 5) {
        try {
            bounds.first_max = std::stoull(argv[1]);
            bounds.diff_max = std::stoull(argv[2]);
            bounds.len_min = std::stoull(argv[3]);
            bounds.len_max = std::stoull(argv[4]);
        } catch (const std::exception&) {
            std::cerr << "usage: bench_audit [first_max diff_max len_min len_max]\n";
            return 1;
        }
    } else if (argc != 1) {
        std::cerr << "usage: bench_audit [first_max diff_max len_min len_max]\n";
        return 1;
    }

    std::cout << "bounds: first<=" << bounds.first_max << " diff<=" << bounds.diff_max
              << " len " << bounds.len_min << ".." << bounds.len_max << " ("
              << iasi::search_space_size(TheoremId::T2_3, bounds)
              << " ordered descriptor pairs)\n\n";
    std::cout << std::left << std::setw(9) << "theorem" << std::right << std::setw(9)
              << "checked" << std::setw(12) << "serial ms" << std::setw(12)
              << "parallel ms" << std::setw(10) << "speedup" << std::setw(7) << "match"
              << "\n";

    bool all_match = true;
    for (TheoremId id : {TheoremId::T1_3, TheoremId::T2_3, TheoremId::C2_4,
                         TheoremId::P2_6, TheoremId::T2_8, TheoremId::T2_9}) {
        AuditReport serial_report;
        AuditReport parallel_report;
        double serial_ms = run_ms(id, bounds, ExecutionMode::serial, serial_report);
        double parallel_ms = run_ms(id, bounds, ExecutionMode::parallel, parallel_report);
        bool match = same_report(serial_report, parallel_report);
        all_match = all_match && match;
        std::cout << std::left << std::setw(9) << to_string(id) << std::right
                  << std::setw(9) << serial_report.checked << std::setw(12) << std::fixed
                  << std::setprecision(2) << serial_ms << std::setw(12) << parallel_ms
                  << std::setw(10) << std::setprecision(2)
                  << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << std::setw(7)
                  << (match ? "yes" : "NO") << "\n";
    }
    return all_match ? 0 : 1;
}
