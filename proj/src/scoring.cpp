#include "cover/scoring.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "cover/errors.hpp"
#include "cover/instance.hpp"

namespace fs = std::filesystem;

namespace cover {

Rational score_instance(long long best, std::optional<long long> team) {
    if (best < 1) throw InvalidParams("best piece count must be >= 1");
    if (!team) return 0;
    if (*team < best)
        throw InconsistentBest("team count " + std::to_string(*team) + " beats best " +
                               std::to_string(best));
    return rat(best * best, *team * *team);
}

unsigned worker_pool_size() {
    if (const char* env = std::getenv("COVER_THREADS")) {
        long v = std::atol(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& job) {
    if (n == 0) return;
    threads = std::min<std::size_t>(threads ? threads : 1, n);
    if (threads == 1) {
        for (std::size_t i = 0; i < n; ++i) job(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mu;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                try {
                    job(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

namespace {

std::vector<fs::path> sorted_files(const fs::path& dir, const std::string& ext) {
    std::vector<fs::path> out;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ext) out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

struct Submission {
    std::string team;
    fs::path file;
    std::string instance_name;
    long long count = 0;
    bool valid = false;
    std::string note;
};

}  // namespace

ScoreTable build_leaderboard(const std::string& instance_dir, const std::string& solutions_root) {
    std::map<std::string, Instance> instances;
    for (const fs::path& f : sorted_files(instance_dir, ".json")) {
        Instance inst = load_instance_file(f.string());
        instances.emplace(inst.name, std::move(inst));
    }

    std::vector<std::string> team_names;
    std::vector<Submission> subs;
    for (const auto& e : fs::directory_iterator(solutions_root))
        if (e.is_directory()) team_names.push_back(e.path().filename().string());
    std::sort(team_names.begin(), team_names.end());
    for (const std::string& team : team_names)
        for (const fs::path& f : sorted_files(fs::path(solutions_root) / team, ".json"))
            subs.push_back({team, f, "", 0, false, ""});

    parallel_for(subs.size(), worker_pool_size(), [&](std::size_t i) {
        Submission& s = subs[i];
        try {
            Solution sol = load_solution_file(s.file.string());
            s.instance_name = sol.instance_name;
            auto it = instances.find(sol.instance_name);
            if (it == instances.end())
                throw MissingInstance("solution " + s.file.string() +
                                      " names unknown instance '" + sol.instance_name + "'");
            CoverReport report = verify_solution(it->second, sol);
            s.valid = report.valid;
            s.count = static_cast<long long>(report.piece_count);
            if (!s.valid) s.note = "invalid solution (excluded): " + s.file.string();
        } catch (const MissingInstance&) {
            throw;
        } catch (const Error& err) {
            s.note = "unreadable solution (excluded): " + s.file.string() + ": " + err.what();
        }
    });

    ScoreTable table;
    for (const auto& [name, inst] : instances) table.instances.push_back(name);
    for (const Submission& s : subs)
        if (!s.note.empty()) table.warnings.push_back(s.note);

    // per-team best valid count per instance (a team may submit several files)
    std::map<std::string, std::map<std::string, long long>> counts;
    for (const std::string& team : team_names) counts[team];
    for (const Submission& s : subs) {
        if (!s.valid) continue;
        auto& row = counts[s.team];
        auto it = row.find(s.instance_name);
        if (it == row.end() || s.count < it->second) row[s.instance_name] = s.count;
    }
    for (const std::string& name : table.instances) {
        std::optional<long long> best;
        for (const auto& [team, row] : counts) {
            auto it = row.find(name);
            if (it != row.end() && (!best || it->second < *best)) best = it->second;
        }
        if (best) table.best[name] = *best;
    }

    for (const std::string& team : team_names) {
        TeamScore ts;
        ts.name = team;
        ts.counts = counts[team];
        for (const std::string& name : table.instances) {
            auto cit = ts.counts.find(name);
            std::optional<long long> t;
            if (cit != ts.counts.end()) t = cit->second;
            Rational s = t ? score_instance(table.best.at(name), t) : Rational(0);
            ts.scores[name] = s;
            ts.total += s;
        }
        table.teams.push_back(std::move(ts));
    }
    std::sort(table.teams.begin(), table.teams.end(), [](const TeamScore& a, const TeamScore& b) {
        int c = cmp(a.total, b.total);
        if (c != 0) return c > 0;
        return a.name < b.name;
    });
    return table;
}

std::string leaderboard_table(const ScoreTable& table) {
    std::ostringstream os;
    os << "team" << '\t' << "total" << '\t' << "instances_scored" << '\n';
    for (const TeamScore& ts : table.teams)
        os << ts.name << '\t' << rat_to_string(ts.total) << " (~" << to_double(ts.total) << ")"
           << '\t' << ts.counts.size() << "/" << table.instances.size() << '\n';
    for (const std::string& w : table.warnings) os << "warning: " << w << '\n';
    return os.str();
}

std::string leaderboard_json(const ScoreTable& table) {
    nlohmann::ordered_json doc;
    doc["teams"] = nlohmann::ordered_json::array();
    for (const TeamScore& ts : table.teams) {
        nlohmann::ordered_json t;
        t["name"] = ts.name;
        t["total"] = rat_to_string(ts.total);
        nlohmann::ordered_json per = nlohmann::ordered_json::object();
        for (const std::string& name : table.instances)
            per[name] = rat_to_string(ts.scores.at(name));
        t["per_instance"] = std::move(per);
        doc["teams"].push_back(std::move(t));
    }
    nlohmann::ordered_json best = nlohmann::ordered_json::object();
    for (const auto& [name, b] : table.best) best[name] = b;
    doc["best"] = std::move(best);
    return doc.dump(2) + "\n";
}

}  // namespace cover
