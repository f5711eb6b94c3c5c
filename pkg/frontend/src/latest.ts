/**
 * Latest-wins coordination for overlapping async requests.
 *
 * Each begin() supersedes the previous request: its abort signal fires, and
 * even when the response still arrives (a server may ignore the abort),
 * isCurrent() lets the caller drop it unpublished.
 */
export class LatestWins {
  private seq = 0;
  private controller: AbortController | null = null;

  /** Start a new request, aborting and superseding any in-flight one. */
  begin(): { ticket: number; signal: AbortSignal } {
    this.controller?.abort();
    this.controller = new AbortController();
    this.seq += 1;
    return { ticket: this.seq, signal: this.controller.signal };
  }

  /** True while `ticket` belongs to the most recently started request. */
  isCurrent(ticket: number): boolean {
    return ticket === this.seq;
  }
}
