#include <gtest/gtest.h>

#include <atomic>
#include <semaphore>
#include <thread>

#include "slider/notification.hpp"

namespace slider {
namespace {

using K = NotificationKind;

TEST(NotificationTest, SeverityMapping) {
  EXPECT_EQ(severity_of(K::ReadyToPlay), Severity::Success);
  EXPECT_EQ(severity_of(K::CorrectMove), Severity::Success);
  EXPECT_EQ(severity_of(K::GameComplete), Severity::Success);
  EXPECT_EQ(severity_of(K::Solving), Severity::Warning);
  EXPECT_EQ(severity_of(K::WaitForSolver), Severity::Warning);
  EXPECT_EQ(severity_of(K::WrongMove), Severity::Info);
  EXPECT_EQ(severity_of(K::IllegalMove), Severity::Info);
  EXPECT_EQ(severity_of(K::AlreadySolved), Severity::Info);
  EXPECT_EQ(severity_of(K::Quit), Severity::Info);
  EXPECT_EQ(make_notification(K::Solving).severity, Severity::Warning);
  EXPECT_FALSE(make_notification(K::Quit).text.empty());
}

TEST(NotificationStreamTest, FifoThenDrainAfterClose) {
  NotificationStream stream;
  EXPECT_EQ(stream.send(make_notification(K::Solving)), SendResult::Ack);
  EXPECT_EQ(stream.send(make_notification(K::ReadyToPlay)), SendResult::Ack);
  stream.close();

  std::vector<K> seen;
  stream.receive_loop([&](const Notification& n) { seen.push_back(n.kind); });
  EXPECT_EQ(seen, (std::vector<K>{K::Solving, K::ReadyToPlay}));
}

TEST(NotificationStreamTest, EmptyStreamClosedImmediately) {
  NotificationStream stream;
  stream.close();
  int calls = 0;
  stream.receive_loop([&](const Notification&) { ++calls; });
  EXPECT_EQ(calls, 0);
}

TEST(NotificationStreamTest, SendAfterCloseFails) {
  NotificationStream stream;
  stream.close();
  stream.close();
  EXPECT_TRUE(stream.closed());
  EXPECT_EQ(stream.send(make_notification(K::CorrectMove)), SendResult::Closed);
  EXPECT_FALSE(stream.try_receive().has_value());
}

TEST(NotificationStreamTest, OverflowIsALogicError) {
  NotificationStream stream;
  for (std::size_t i = 0; i < NotificationStream::kCapacity; ++i) {
    ASSERT_EQ(stream.send(make_notification(K::WaitForSolver)), SendResult::Ack);
  }
  EXPECT_THROW((void)stream.send(make_notification(K::WaitForSolver)), std::logic_error);
}

TEST(NotificationStreamTest, ConsumerWakesOnClose) {
  NotificationStream stream;
  std::atomic<bool> done{false};
  std::thread consumer([&] {
    stream.receive_loop([](const Notification&) {});
    done = true;
  });
  std::this_thread::sleep_for(std::chrono::milliseconds(20));
  EXPECT_FALSE(done);
  stream.close();
  consumer.join();
  EXPECT_TRUE(done);
}

TEST(NotificationStreamTest, TwoProducersNoLossPerProducerOrder) {
  NotificationStream stream;
  constexpr int kPerProducer = 500;
  // Keeps in-flight messages within the queue bound; the consumer returns a
  // permit per handled message.
  std::counting_semaphore<NotificationStream::kCapacity> permits(NotificationStream::kCapacity);

  auto producer = [&](K kind) {
    for (int i = 0; i < kPerProducer; ++i) {
      permits.acquire();
      ASSERT_EQ(stream.send(Notification{kind, std::to_string(i), severity_of(kind)}),
                SendResult::Ack);
    }
  };
  int calls = 0;
  int expect_a = 0, expect_b = 0;
  bool ordered = true;
  std::thread consumer([&] {
    stream.receive_loop([&](const Notification& n) {
      ++calls;
      int& expect = n.kind == K::CorrectMove ? expect_a : expect_b;
      ordered = ordered && std::stoi(n.text) == expect;
      ++expect;
      permits.release();
    });
  });
  std::thread a(producer, K::CorrectMove);
  std::thread b(producer, K::WrongMove);
  a.join();
  b.join();
  stream.close();
  consumer.join();
  EXPECT_EQ(calls, 2 * kPerProducer);
  EXPECT_TRUE(ordered);
}

}  // namespace
}  // namespace slider
