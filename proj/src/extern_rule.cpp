#include "ivagg/extern_rule.hpp"

#include "ivagg/errors.hpp"
#include "ivagg/json_io.hpp"

#include <cerrno>
#include <csignal>
#include <cstring>
#include <memory>
#include <mutex>
#include <string>

#include <fcntl.h>
#include <poll.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

namespace ivagg {

namespace {

using Clock = std::chrono::steady_clock;

class Fd
{
public:
  explicit Fd(int fd = -1) noexcept
    : fd_(fd)
  {}
  Fd(Fd const &)            = delete;
  Fd &operator=(Fd const &) = delete;
  ~Fd() { reset(); }

  int  get() const noexcept { return fd_; }
  void reset() noexcept
  {
    if (fd_ >= 0)
    {
      ::close(fd_);
      fd_ = -1;
    }
  }

private:
  int fd_;
};

void ignore_sigpipe_once()
{
  static std::once_flag once;
  std::call_once(once, [] { std::signal(SIGPIPE, SIG_IGN); });
}

[[noreturn]] void fail(std::string const &command, std::string const &what)
{
  throw RuleEvaluationError("extern rule `" + command + "`: " + what);
}

int remaining_ms(Clock::time_point deadline)
{
  auto const left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now());
  return left.count() > 0 ? static_cast<int>(left.count()) : 0;
}

void kill_and_reap(pid_t pid)
{
  ::kill(pid, SIGKILL);
  int status = 0;
  while (::waitpid(pid, &status, 0) < 0 && errno == EINTR)
  {
  }
}

}  // namespace

Interval run_extern_rule(std::string const &command, Profile const &s,
                         std::chrono::milliseconds timeout)
{
  ignore_sigpipe_once();

  int in_pipe[2];
  int out_pipe[2];
  if (::pipe(in_pipe) != 0)
  {
    fail(command, std::string("pipe: ") + std::strerror(errno));
  }
  Fd in_read(in_pipe[0]), in_write(in_pipe[1]);
  if (::pipe(out_pipe) != 0)
  {
    fail(command, std::string("pipe: ") + std::strerror(errno));
  }
  Fd out_read(out_pipe[0]), out_write(out_pipe[1]);

  pid_t const pid = ::fork();
  if (pid < 0)
  {
    fail(command, std::string("fork: ") + std::strerror(errno));
  }
  if (pid == 0)
  {
    ::dup2(in_read.get(), STDIN_FILENO);
    ::dup2(out_write.get(), STDOUT_FILENO);
    ::close(in_read.get());
    ::close(in_write.get());
    ::close(out_read.get());
    ::close(out_write.get());
    // Put the child in its own process group so a timeout kills the whole shell pipeline.
    ::setpgid(0, 0);
    ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char *>(nullptr));
    ::_exit(127);
  }
  ::setpgid(pid, pid);
  in_read.reset();
  out_write.reset();

  auto const  deadline = Clock::now() + timeout;
  std::string input    = profile_to_json(s).dump() + "\n";
  std::string output;
  std::size_t written = 0;
  bool        timed_out = false;
  bool        eof       = false;

  ::fcntl(in_write.get(), F_SETFL, O_NONBLOCK);
  while (!eof)
  {
    pollfd fds[2];
    nfds_t count = 0;
    if (in_write.get() >= 0)
    {
      fds[count++] = {in_write.get(), POLLOUT, 0};
    }
    fds[count++] = {out_read.get(), POLLIN, 0};
    int const ready = ::poll(fds, count, remaining_ms(deadline));
    if (ready < 0)
    {
      if (errno == EINTR)
      {
        continue;
      }
      ::kill(-pid, SIGKILL);
      kill_and_reap(pid);
      fail(command, std::string("poll: ") + std::strerror(errno));
    }
    if (ready == 0)
    {
      timed_out = true;
      break;
    }
    for (nfds_t k = 0; k < count; ++k)
    {
      if (fds[k].revents == 0)
      {
        continue;
      }
      if (fds[k].fd == in_write.get())
      {
        ssize_t const n = ::write(in_write.get(), input.data() + written, input.size() - written);
        if (n > 0)
        {
          written += static_cast<std::size_t>(n);
        }
        // EPIPE: the child does not read its input; that is its business.
        if (written == input.size() || (n < 0 && errno != EAGAIN && errno != EINTR))
        {
          in_write.reset();
        }
      }
      else
      {
        char          buf[4096];
        ssize_t const n = ::read(out_read.get(), buf, sizeof(buf));
        if (n > 0)
        {
          output.append(buf, static_cast<std::size_t>(n));
        }
        else if (n == 0 || (errno != EAGAIN && errno != EINTR))
        {
          eof = true;
        }
      }
    }
  }
  if (timed_out)
  {
    ::kill(-pid, SIGKILL);
    kill_and_reap(pid);
    fail(command, "timed out after " + std::to_string(timeout.count()) + " ms");
  }

  int status = 0;
  while (true)
  {
    pid_t const r = ::waitpid(pid, &status, WNOHANG);
    if (r == pid)
    {
      break;
    }
    if (r < 0 && errno != EINTR)
    {
      fail(command, std::string("waitpid: ") + std::strerror(errno));
    }
    if (remaining_ms(deadline) == 0)
    {
      ::kill(-pid, SIGKILL);
      kill_and_reap(pid);
      fail(command, "timed out after " + std::to_string(timeout.count()) + " ms");
    }
    ::usleep(1000);
  }
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0)
  {
    fail(command, "exited abnormally (status " + std::to_string(status) + ")");
  }

  try
  {
    return interval_from_json(nlohmann::json::parse(output));
  }
  catch (nlohmann::json::exception const &)
  {
    fail(command, "malformed output: " + output.substr(0, 200));
  }
  catch (Error const &e)
  {
    fail(command, std::string("bad interval in output: ") + e.what());
  }
}

RuleHandle extern_rule_adapter(std::string command, std::chrono::milliseconds timeout)
{
  auto lock = std::make_shared<std::mutex>();
  std::string name = "extern:" + command;
  return RuleHandle{std::move(name),
                    [command = std::move(command), timeout, lock](Profile const &s) {
                      std::lock_guard guard(*lock);
                      return run_extern_rule(command, s, timeout);
                    },
                    std::nullopt};
}

}  // namespace ivagg
