#pragma once

// Runs a command (no shell), relays its standard output, and captures its
// standard error. Both pipes are drained from one poll() loop, so a child
// that fills one pipe while we wait on the other cannot stall.

#include <errlingo/text.hpp>

#include <cerrno>
#include <cstring>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include <fcntl.h>
#include <poll.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

extern char** environ;

namespace errlingo {

struct RunRequest {
    std::vector<std::string> argv;
};

struct RunResult {
    int exit_status = 0;     // exit code, or 128 + signal number
    bool signaled = false;
    std::string stdout_text;
    std::string stderr_text;  // byte-exact
    std::vector<std::string> stderr_lines;
};

/// The program could not be started at all.
class SpawnError : public std::system_error {
public:
    SpawnError(int err, const std::string& program)
        : std::system_error(err, std::generic_category(), "cannot execute '" + program + "'") {}
};

/// Reading from the child failed mid-run.
class CaptureError : public std::system_error {
public:
    using std::system_error::system_error;
};

using OutputSink = std::function<void(std::string_view)>;

namespace detail {

class Fd {
public:
    Fd() = default;
    explicit Fd(int fd) : fd_(fd) {}
    Fd(Fd&& o) noexcept : fd_(o.release()) {}
    Fd& operator=(Fd&& o) noexcept {
        if (this != &o) reset(o.release());
        return *this;
    }
    Fd(const Fd&) = delete;
    Fd& operator=(const Fd&) = delete;
    ~Fd() { reset(); }

    int get() const noexcept { return fd_; }
    explicit operator bool() const noexcept { return fd_ >= 0; }
    int release() noexcept { return std::exchange(fd_, -1); }
    void reset(int fd = -1) noexcept {
        if (fd_ >= 0) ::close(fd_);
        fd_ = fd;
    }

private:
    int fd_ = -1;
};

struct Pipe {
    Fd read, write;
};

inline Pipe make_pipe() {
    int fds[2];
    if (::pipe2(fds, O_CLOEXEC) != 0) throw std::system_error(errno, std::generic_category(), "pipe2");
    return {Fd(fds[0]), Fd(fds[1])};
}

class SpawnActions {
public:
    SpawnActions() {
        if (int rc = ::posix_spawn_file_actions_init(&actions_))
            throw std::system_error(rc, std::generic_category(), "posix_spawn_file_actions_init");
    }
    ~SpawnActions() { ::posix_spawn_file_actions_destroy(&actions_); }
    SpawnActions(const SpawnActions&) = delete;
    SpawnActions& operator=(const SpawnActions&) = delete;

    void dup2(int from, int to) {
        if (int rc = ::posix_spawn_file_actions_adddup2(&actions_, from, to))
            throw std::system_error(rc, std::generic_category(), "posix_spawn_file_actions_adddup2");
    }
    const posix_spawn_file_actions_t* get() const { return &actions_; }

private:
    posix_spawn_file_actions_t actions_;
};

}  // namespace detail

/// Spawns req.argv[0] (searched on PATH) with the inherited environment,
/// working directory and standard input. Every chunk of the child's stdout
/// is forwarded to `on_stdout` as it arrives and also recorded. `on_spawned`
/// runs once the child exists and before any of its output is read.
inline RunResult run_command(const RunRequest& req, const OutputSink& on_stdout = {},
                             const std::function<void()>& on_spawned = {}) {
    if (req.argv.empty()) throw std::invalid_argument("empty command");

    auto out = detail::make_pipe();
    auto err = detail::make_pipe();

    detail::SpawnActions actions;
    actions.dup2(out.write.get(), STDOUT_FILENO);
    actions.dup2(err.write.get(), STDERR_FILENO);

    std::vector<char*> argv;
    argv.reserve(req.argv.size() + 1);
    for (const auto& a : req.argv) argv.push_back(const_cast<char*>(a.c_str()));
    argv.push_back(nullptr);

    pid_t pid = -1;
    if (int rc = ::posix_spawnp(&pid, argv[0], actions.get(), nullptr, argv.data(), environ))
        throw SpawnError(rc, req.argv[0]);

    out.write.reset();
    err.write.reset();
    if (on_spawned) on_spawned();

    RunResult result;
    auto reap = [&] {
        int status = 0;
        while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
        }
        return status;
    };

    std::vector<char> buf(64 * 1024);
    pollfd fds[2] = {{out.read.get(), POLLIN, 0}, {err.read.get(), POLLIN, 0}};
    int open_streams = 2;
    while (open_streams > 0) {
        if (::poll(fds, 2, -1) < 0) {
            if (errno == EINTR) continue;
            int e = errno;
            reap();
            throw CaptureError(e, std::generic_category(), "poll");
        }
        for (auto& p : fds) {
            if (p.fd < 0 || p.revents == 0) continue;
            ssize_t n = ::read(p.fd, buf.data(), buf.size());
            if (n < 0) {
                if (errno == EINTR || errno == EAGAIN) continue;
                int e = errno;
                reap();
                throw CaptureError(e, std::generic_category(), "read");
            }
            if (n == 0) {
                p.fd = -1;
                --open_streams;
                continue;
            }
            std::string_view chunk(buf.data(), static_cast<std::size_t>(n));
            if (p.fd == out.read.get()) {
                result.stdout_text.append(chunk);
                if (on_stdout) on_stdout(chunk);
            } else {
                result.stderr_text.append(chunk);
            }
        }
    }

    int status = reap();
    if (WIFEXITED(status)) {
        result.exit_status = WEXITSTATUS(status);
    } else if (WIFSIGNALED(status)) {
        result.signaled = true;
        result.exit_status = 128 + WTERMSIG(status);
    }
    result.stderr_lines = split_lines(result.stderr_text);
    return result;
}

}  // namespace errlingo
