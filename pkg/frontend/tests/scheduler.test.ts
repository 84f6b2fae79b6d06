import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { EvaluationScheduler } from "../src/scheduler.js";

interface Deferred {
  resolve: (value: string) => void;
  reject: (error: unknown) => void;
}

function makeRunner() {
  const calls: number[] = [];
  const pending: Deferred[] = [];
  let concurrent = 0;
  let maxConcurrent = 0;
  const run = (request: number) => {
    calls.push(request);
    concurrent += 1;
    maxConcurrent = Math.max(maxConcurrent, concurrent);
    return new Promise<string>((resolve, reject) => {
      pending.push({
        resolve: (value) => {
          concurrent -= 1;
          resolve(value);
        },
        reject: (error) => {
          concurrent -= 1;
          reject(error);
        },
      });
    });
  };
  return { run, calls, pending, maxConcurrent: () => maxConcurrent };
}

describe("EvaluationScheduler", () => {
  beforeEach(() => {
    vi.useFakeTimers();
  });
  afterEach(() => {
    vi.useRealTimers();
  });

  it("debounces on the trailing edge", async () => {
    const runner = makeRunner();
    const results: Array<[number, string]> = [];
    const scheduler = new EvaluationScheduler<number, string>(
      runner.run,
      (req, res) => results.push([req, res]),
      () => {},
      100,
    );

    scheduler.request(1);
    scheduler.request(2);
    vi.advanceTimersByTime(99);
    expect(runner.calls).toEqual([]);
    scheduler.request(3);
    vi.advanceTimersByTime(99);
    expect(runner.calls).toEqual([]);
    vi.advanceTimersByTime(1);
    expect(runner.calls).toEqual([3]);

    runner.pending[0].resolve("three");
    await vi.runAllTimersAsync();
    expect(results).toEqual([[3, "three"]]);
  });

  it("keeps at most one request in flight and the latest state wins", async () => {
    const runner = makeRunner();
    const results: Array<[number, string]> = [];
    const scheduler = new EvaluationScheduler<number, string>(
      runner.run,
      (req, res) => results.push([req, res]),
      () => {},
      100,
    );

    scheduler.request(1);
    vi.advanceTimersByTime(100);
    expect(scheduler.inFlight).toBe(1);

    // a burst of drags while the first evaluation is still out
    for (const v of [2, 3, 4, 5]) {
      scheduler.request(v);
      vi.advanceTimersByTime(100);
    }
    expect(runner.calls).toEqual([1]);
    expect(scheduler.inFlight).toBe(1);

    runner.pending[0].resolve("one");
    await vi.runAllTimersAsync();
    // stale response dropped, newest state evaluated next
    expect(runner.calls).toEqual([1, 5]);
    expect(runner.maxConcurrent()).toBe(1);
    expect(results).toEqual([]);

    runner.pending[1].resolve("five");
    await vi.runAllTimersAsync();
    expect(results).toEqual([[5, "five"]]);
  });

  it("waits out an unelapsed debounce before relaunching", async () => {
    const runner = makeRunner();
    const results: Array<[number, string]> = [];
    const scheduler = new EvaluationScheduler<number, string>(
      runner.run,
      (req, res) => results.push([req, res]),
      () => {},
      100,
    );

    scheduler.request(1);
    vi.advanceTimersByTime(100);
    scheduler.request(2); // debounce running when the response lands
    runner.pending[0].resolve("one");
    await Promise.resolve();
    expect(runner.calls).toEqual([1]);
    await vi.advanceTimersByTimeAsync(100);
    expect(runner.calls).toEqual([1, 2]);
    runner.pending[1].resolve("two");
    await vi.runAllTimersAsync();
    expect(results).toEqual([[2, "two"]]);
  });

  it("reports errors only for the current state", async () => {
    const runner = makeRunner();
    const errors: number[] = [];
    const scheduler = new EvaluationScheduler<number, string>(
      runner.run,
      () => {},
      (req) => errors.push(req),
      100,
    );

    scheduler.request(1);
    vi.advanceTimersByTime(100);
    runner.pending[0].reject(new Error("boom"));
    await vi.runAllTimersAsync();
    expect(errors).toEqual([1]);
  });
});
