# -*- coding: utf-8 -*-
# spectral-distance, Connes distances on finite spectral triples,
# (C) 2026 The spectral-distance authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
specdist.thread_pool
~~~~~~~~~~~~~~~~~~~~

This module implements a thread pool API to run independent solves in
parallel. Results come back in submission order.

:copyright: (c) 2026 by the spectral-distance authors.
:license: Apache 2.0, see LICENSE for more details.

"""

from queue import Queue
from threading import Thread


class Worker(Thread):
    """ Thread executing tasks from a given tasks queue """

    def __init__(self, tasks_queue, results_queue, exceptions_queue):
        Thread.__init__(self)
        self.tasks_queue = tasks_queue
        self.results_queue = results_queue
        self.exceptions_queue = exceptions_queue
        self.daemon = True
        self.start()

    def run(self):
        """ Receive tasks until the stop marker """
        while True:
            task = self.tasks_queue.get()
            if not task:
                self.tasks_queue.task_done()
                break
            # Skip the remaining work once a task failed.
            if self.exceptions_queue.empty():
                index, func, args, kargs = task
                try:
                    self.results_queue.put((index, func(*args, **kargs)))
                except Exception as e:
                    self.exceptions_queue.put((index, e))
            self.tasks_queue.task_done()


class ThreadPool(object):
    """ Pool of threads consuming tasks from a queue """

    def __init__(self, num_threads):
        self.results_queue = Queue()
        self.exceptions_queue = Queue()
        self.tasks_queue = Queue(num_threads)
        self.num_threads = num_threads
        self._count = 0

    def add_task(self, func, *args, **kargs):
        """ Add a task to the queue """
        self.tasks_queue.put((self._count, func, args, kargs))
        self._count += 1

    def start_parallel(self):
        """ Prepare threads to run tasks"""
        for _ in range(self.num_threads):
            Worker(self.tasks_queue, self.results_queue, self.exceptions_queue)

    def result(self):
        """
        Stop threads and return the results of all tasks in the order
        they were added. The first failure, by task order, is raised.
        """
        for _ in range(self.num_threads):
            self.tasks_queue.put(None)
        self.tasks_queue.join()
        if not self.exceptions_queue.empty():
            failures = []
            while not self.exceptions_queue.empty():
                failures.append(self.exceptions_queue.get())
            raise min(failures, key=lambda item: item[0])[1]
        results = []
        while not self.results_queue.empty():
            results.append(self.results_queue.get())
        return [value for _, value in sorted(results, key=lambda r: r[0])]


def run_tasks(func, items, workers=1):
    """
    [func(*item) for item in items], on ``workers`` threads.
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [func(*item) for item in items]
    pool = ThreadPool(min(workers, len(items)))
    pool.start_parallel()
    for item in items:
        pool.add_task(func, *item)
    return pool.result()
