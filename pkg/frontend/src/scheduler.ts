/** Debounced, latest-wins evaluation scheduling.
 *
 * Control changes arrive much faster than evaluations should be issued:
 * requests fire on the trailing edge of a quiet period, at most one is
 * in flight at a time, and a response is only delivered if no newer
 * state superseded its request, so the dashboard never renders stale
 * results mid-drag.
 */

export const DEBOUNCE_MS = 100;

export class EvaluationScheduler<Req, Res> {
  private timer: ReturnType<typeof setTimeout> | null = null;
  private queued: Req | null = null;
  private inFlightCount = 0;

  constructor(
    private readonly run: (request: Req) => Promise<Res>,
    private readonly onResult: (request: Req, response: Res) => void,
    private readonly onError: (request: Req, error: unknown) => void,
    private readonly delayMs: number = DEBOUNCE_MS,
  ) {}

  /** Note a new desired state; an evaluation fires once input settles. */
  request(request: Req): void {
    this.queued = request;
    if (this.timer !== null) clearTimeout(this.timer);
    this.timer = setTimeout(() => {
      this.timer = null;
      this.launch();
    }, this.delayMs);
  }

  get inFlight(): number {
    return this.inFlightCount;
  }

  private get superseded(): boolean {
    return this.queued !== null || this.timer !== null;
  }

  private launch(): void {
    if (this.inFlightCount > 0 || this.queued === null) return;
    const request = this.queued;
    this.queued = null;
    this.inFlightCount += 1;
    this.run(request).then(
      (response) => {
        this.inFlightCount -= 1;
        if (this.superseded) this.launchIfSettled();
        else this.onResult(request, response);
      },
      (error) => {
        this.inFlightCount -= 1;
        if (this.superseded) this.launchIfSettled();
        else this.onError(request, error);
      },
    );
  }

  private launchIfSettled(): void {
    // a queued request whose debounce already elapsed launches now;
    // otherwise the pending timer will get to it
    if (this.timer === null) this.launch();
  }
}
