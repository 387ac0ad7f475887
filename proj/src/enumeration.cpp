#include "hurwitz/enumeration.hpp"

#include "hurwitz/error.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace hurwitz {

namespace {

constexpr const char* checkpoint_magic = "hurwitz-checkpoint 1";

enum class NodeState : unsigned char { Pending, Regular, NotRegular };

class VisitedSet {
public:
    /// Inserts t as pending; false if it was already present.
    bool claim(const Triangulation& t)
    {
        auto& s = shard(t);
        std::lock_guard lock(s.mutex);
        return s.map.emplace(t, NodeState::Pending).second;
    }

    void set(const Triangulation& t, NodeState state)
    {
        auto& s = shard(t);
        std::lock_guard lock(s.mutex);
        s.map[t] = state;
    }

    std::vector<Triangulation> regular() const
    {
        std::vector<Triangulation> out;
        for (const auto& s : shards_)
            for (const auto& [t, state] : s.map)
                if (state == NodeState::Regular)
                    out.push_back(t);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    struct Shard {
        std::mutex mutex;
        std::unordered_map<Triangulation, NodeState, TriangulationHash> map;
    };

    Shard& shard(const Triangulation& t) { return shards_[TriangulationHash{}(t) % shards_.size()]; }

    std::array<Shard, 64> shards_;
};

void write_checkpoint(const std::string& path, const PointConfiguration& config,
                      const std::vector<Triangulation>& visited, const std::vector<Triangulation>& frontier)
{
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw Error(ErrorCode::InvalidArgument, "cannot write checkpoint " + tmp);
        out << checkpoint_magic << " digest=" << config.digest() << " points=" << config.size()
            << " dim=" << config.dim() << '\n';
        for (const auto& t : visited)
            out << "V " << t.encode() << '\n';
        for (const auto& t : frontier)
            out << "F " << t.encode() << '\n';
        out << "E " << visited.size() << ' ' << frontier.size() << '\n';
        if (!out)
            throw Error(ErrorCode::InvalidArgument, "failed writing checkpoint " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

struct CheckpointState {
    std::vector<Triangulation> visited;
    std::vector<Triangulation> frontier;
};

CheckpointState read_checkpoint(const std::string& path, const PointConfiguration& config)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::CheckpointCorrupt, "cannot read checkpoint " + path);
    std::string header;
    if (!std::getline(in, header) || header.rfind(checkpoint_magic, 0) != 0)
        throw Error(ErrorCode::CheckpointCorrupt, "missing checkpoint header in " + path);
    const std::string expected = "digest=" + config.digest();
    if (header.find(expected) == std::string::npos)
        throw Error(ErrorCode::DigestMismatch, "checkpoint " + path + " belongs to a different configuration");

    CheckpointState state;
    std::string line;
    bool ended = false;
    const Cell all = config.size() == 64 ? ~Cell{0} : (bit(config.size()) - 1);
    while (std::getline(in, line)) {
        if (ended)
            throw Error(ErrorCode::CheckpointCorrupt, "data after end marker in " + path);
        if (line.size() < 2 || line[1] != ' ')
            throw Error(ErrorCode::CheckpointCorrupt, "malformed checkpoint line: " + line);
        const char tag = line[0];
        const std::string body = line.substr(2);
        if (tag == 'E') {
            std::istringstream counts(body);
            std::size_t v = 0;
            std::size_t f = 0;
            if (!(counts >> v >> f) || v != state.visited.size() || f != state.frontier.size())
                throw Error(ErrorCode::CheckpointCorrupt, "checkpoint record counts do not match in " + path);
            ended = true;
            continue;
        }
        if (tag != 'V' && tag != 'F')
            throw Error(ErrorCode::CheckpointCorrupt, "unknown checkpoint record: " + line);
        Triangulation t;
        try {
            t = Triangulation::decode(body);
        } catch (const Error&) {
            throw Error(ErrorCode::CheckpointCorrupt, "bad triangulation in checkpoint: " + line);
        }
        for (auto c : t.cells())
            if ((c & ~all) != 0 || static_cast<std::size_t>(cell_size(c)) != config.dim() + 1)
                throw Error(ErrorCode::CheckpointCorrupt, "triangulation does not fit configuration: " + line);
        (tag == 'V' ? state.visited : state.frontier).push_back(std::move(t));
    }
    if (!ended)
        throw Error(ErrorCode::CheckpointCorrupt, "checkpoint " + path + " is truncated");
    return state;
}

}  // namespace

EnumerationResult enumerate_regular(const TriangulationContext& ctx, const EnumerationOptions& options)
{
    if (options.budget < 1)
        throw Error(ErrorCode::InvalidArgument, "budget must be at least 1");
    const std::size_t jobs = std::max<std::size_t>(1, options.jobs);

    VisitedSet visited;
    std::atomic<std::size_t> regular_count{0};
    std::atomic<std::size_t> tests{0};
    std::vector<Triangulation> frontier;

    const bool resuming = !options.checkpoint.empty() && std::filesystem::exists(options.checkpoint);
    if (resuming) {
        auto state = read_checkpoint(options.checkpoint, ctx.config());
        for (auto& t : state.visited)
            if (visited.claim(t)) {
                visited.set(t, NodeState::Regular);
                ++regular_count;
            }
        frontier = std::move(state.frontier);
    } else {
        Triangulation seed = options.seed ? *options.seed : placing_triangulation(ctx.config());
        if (!ctx.regular(seed))
            throw Error(ErrorCode::InvalidArgument, "enumeration seed is not regular");
        visited.claim(seed);
        visited.set(seed, NodeState::Regular);
        regular_count = 1;
        frontier.push_back(std::move(seed));
    }
    if (regular_count > options.budget)
        throw Error(ErrorCode::BudgetExceeded, "more than " + std::to_string(options.budget) +
                                                   " regular triangulations");

    std::atomic<bool> over_budget{false};
    std::size_t since_flush = 0;

    auto flush = [&](const std::vector<Triangulation>& open) {
        if (options.checkpoint.empty())
            return;
        write_checkpoint(options.checkpoint, ctx.config(), visited.regular(), open);
        since_flush = 0;
    };

    EnumerationResult result;
    while (!frontier.empty()) {
        if (options.stop_after != 0 && regular_count >= options.stop_after) {
            flush(frontier);
            result.complete = false;
            result.triangulations = visited.regular();
            result.regularity_tests = tests;
            return result;
        }
        std::atomic<std::size_t> cursor{0};
        std::vector<std::vector<Triangulation>> found(jobs);
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&](std::size_t id) {
            try {
                for (;;) {
                    const std::size_t i = cursor.fetch_add(1);
                    if (i >= frontier.size() || over_budget)
                        return;
                    const Triangulation& t = frontier[i];
                    for (const auto& z : ctx.supported_flips(t)) {
                        auto next = ctx.try_flip(t, z);
                        if (!next || !visited.claim(*next))
                            continue;
                        ++tests;
                        if (ctx.regular(*next)) {
                            visited.set(*next, NodeState::Regular);
                            if (++regular_count > options.budget) {
                                over_budget = true;
                                return;
                            }
                            found[id].push_back(std::move(*next));
                        } else {
                            visited.set(*next, NodeState::NotRegular);
                        }
                    }
                }
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        };
        if (jobs == 1) {
            worker(0);
        } else {
            std::vector<std::thread> threads;
            for (std::size_t id = 0; id < jobs; ++id)
                threads.emplace_back(worker, id);
            for (auto& th : threads)
                th.join();
        }
        if (failure)
            std::rethrow_exception(failure);
        if (over_budget)
            throw Error(ErrorCode::BudgetExceeded, "more than " + std::to_string(options.budget) +
                                                       " regular triangulations");
        since_flush += frontier.size();
        std::vector<Triangulation> next;
        for (auto& part : found)
            for (auto& t : part)
                next.push_back(std::move(t));
        std::sort(next.begin(), next.end());
        frontier = std::move(next);
        if (since_flush >= options.checkpoint_interval)
            flush(frontier);
    }
    flush(frontier);
    result.triangulations = visited.regular();
    result.regularity_tests = tests;
    return result;
}

EnumerationResult enumerate_regular(const PointConfiguration& config, const EnumerationOptions& options)
{
    TriangulationContext ctx(config);
    return enumerate_regular(ctx, options);
}

}  // namespace hurwitz
