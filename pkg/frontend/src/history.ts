export class HistoryStack<T> {
  private undoStack: T[] = [];
  private redoStack: T[] = [];
  constructor(private maxHistory = 500) {}

  init(state: T) {
    this.undoStack = [state];
    this.redoStack = [];
  }

  push(state: T) {
    this.undoStack.push(state);
    if (this.undoStack.length > this.maxHistory) this.undoStack.shift();
    this.redoStack = [];
  }

  current(): T | undefined {
    return this.undoStack[this.undoStack.length - 1];
  }

  undo(): T | undefined {
    if (this.undoStack.length > 1) {
      const current = this.undoStack.pop()!;
      this.redoStack.push(current);
      return this.undoStack[this.undoStack.length - 1];
    }
    return undefined;
  }

  redo(): T | undefined {
    if (this.redoStack.length > 0) {
      const next = this.redoStack.pop()!;
      this.undoStack.push(next);
      return next;
    }
    return undefined;
  }

  canUndo(): boolean {
    return this.undoStack.length > 1;
  }

  canRedo(): boolean {
    return this.redoStack.length > 0;
  }
}
